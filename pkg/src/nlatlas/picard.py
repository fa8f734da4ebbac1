"""Exact bilinear algebra on the Picard lattice of the plane blown up at k
general points.

A divisor class is written D = d*L - sum_i m_i * E_i over the standard basis
(L; E_1, ..., E_k), so the intersection form is diag(+1, -1, ..., -1):

    D . D' = d*d' - sum_i m_i * m'_i

All arithmetic is over Python integers, hence exact at any size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MismatchedLattice, ParityViolation


@dataclass(frozen=True)
class DivisorClass:
    """A class d*L - sum m_i E_i on Bl_k P^2; ``mults`` stores the m_i."""

    plane_degree: int
    mults: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))

    @property
    def k(self) -> int:
        return len(self.mults)

    def dot(self, other: "DivisorClass") -> int:
        return pair(self, other)

    def __str__(self) -> str:
        if not self.mults:
            return f"({self.plane_degree};)"
        return f"({self.plane_degree}; {','.join(str(m) for m in self.mults)})"


def pair(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number of two classes on the same lattice."""
    if d1.k != d2.k:
        raise MismatchedLattice(f"cannot pair classes with k={d1.k} and k={d2.k}")
    return d1.plane_degree * d2.plane_degree - sum(a * b for a, b in zip(d1.mults, d2.mults))


def canonical(k: int) -> DivisorClass:
    """The canonical class K = -3L + sum E_i, in the stored sign convention."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return DivisorClass(-3, (-1,) * k)


def riemann_roch_chi(d: DivisorClass) -> int:
    """chi(O(D)) = 1 + D.(D - K)/2 on a rational surface."""
    kc = canonical(d.k)
    n = pair(d, d) - pair(d, kc)
    if n % 2 != 0:
        raise ParityViolation(f"D.(D-K) = {n} is odd for D = {d}")
    return 1 + n // 2


def adjunction_genus(d: DivisorClass) -> int:
    """Arithmetic genus 1 + (D^2 + D.K)/2 of a curve in class D."""
    kc = canonical(d.k)
    n = pair(d, d) + pair(d, kc)
    if n % 2 != 0:
        raise ParityViolation(f"D^2 + D.K = {n} is odd for D = {d}")
    return 1 + n // 2


def _exceptional(k: int, i: int) -> DivisorClass:
    m = [0] * k
    m[i] = -1
    return DivisorClass(0, m)


def neg_curve_catalogue(k: int, degree_bound: int = 3) -> list[DivisorClass]:
    """Representatives of (-1)-classes of plane degree <= degree_bound.

    The shapes are E_i, L - Ei - Ej, 2L - (five E's), 3L - 2Ei - (six E's);
    every returned class C satisfies C^2 = -1 and C.K = -1.  This is a fixed
    finite catalogue, not a full Cremona-orbit enumeration.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    out: list[DivisorClass] = [_exceptional(k, i) for i in range(k)]
    for i, j in itertools.combinations(range(k), 2):
        m = [0] * k
        m[i] = m[j] = 1
        out.append(DivisorClass(1, m))
    if degree_bound >= 2:
        for idx in itertools.combinations(range(k), 5):
            m = [0] * k
            for i in idx:
                m[i] = 1
            out.append(DivisorClass(2, m))
    if degree_bound >= 3:
        for i in range(k):
            for idx in itertools.combinations((j for j in range(k) if j != i), 6):
                m = [0] * k
                m[i] = 2
                for j in idx:
                    m[j] = 1
                out.append(DivisorClass(3, m))
    # shapes cannot collide, but dedup anyway to keep the contract explicit
    seen = set()
    unique = []
    for c in out:
        key = (c.plane_degree, c.mults)
        if key not in seen:
            seen.add(key)
            unique.append(c)
    return unique
