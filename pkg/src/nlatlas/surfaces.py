"""Plane models S(a; n1, n2, ...) and the invariant records of the embedded
surfaces they define.

A plane model is the image of P^2 under the linear system of degree-a curves
with n_i general base points of multiplicity i.  The hyperplane class is
H = a*L - sum m_j E_j.  Base-point data for which H pairs to zero with a
(-1)-class is handled by blow-down bookkeeping: each contracted class raises
K^2 by one and lowers chi_top by one, while every H-derived number (degree,
sectional genus, chi(O(H))) is unchanged because H.C = 0.

Surfaces that are not blow-ups of the plane (K3 projections and friends)
enter through abstract invariants (deg, g, K^2, chi(O)); chi_top is then
forced by the Noether formula K^2 = 12 chi(O) - chi_top.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import NotNef, NotProjectable, ParseError, SpanTooSmall
from .picard import DivisorClass, adjunction_genus, pair, riemann_roch_chi

# ambient projective space is P^7 throughout; a surface with h0_H > 8 can only
# be brought there by a projection, so its span is clamped at P^7 for display
AMBIENT_H0 = 8


@dataclass(frozen=True)
class PlaneModel:
    """S(a; n1, n2, ...): degree a with n_i points of multiplicity i."""

    a: int
    point_counts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "point_counts", tuple(int(n) for n in self.point_counts))
        if self.a < 1:
            raise ValueError(f"plane-curve degree must be >= 1, got {self.a}")
        if any(n < 0 for n in self.point_counts):
            raise ValueError(f"point counts must be >= 0, got {self.point_counts}")

    @property
    def total_points(self) -> int:
        return sum(self.point_counts)

    def spec_string(self) -> str:
        return f"{self.a};{','.join(str(n) for n in self.point_counts)}"

    def __str__(self) -> str:
        return f"S({self.spec_string()})"


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical record of an embedded surface.

    ``h0_H`` is chi(O_S(H)) under the vanishing assumption h^1 = h^2 = 0; the
    span of the embedded surface is P^(min(h0_H, 8) - 1).  ``nodes`` counts
    ordinary double points of the embedded image; all other fields describe
    the smooth model.
    """

    degree: int
    sect_genus: int
    K2: int
    chi_O: int
    chi_top: int
    h0_H: int
    nodes: int = 0
    linearly_normal: bool = True
    provenance_label: str = ""

    def __post_init__(self):
        if self.chi_top != 12 * self.chi_O - self.K2:
            raise ValueError(
                f"Noether identity violated: chi_top={self.chi_top} != "
                f"12*{self.chi_O} - {self.K2}"
            )
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        if self.nodes < 0:
            raise ValueError(f"nodes must be >= 0, got {self.nodes}")

    @property
    def HK(self) -> int:
        """H.K recovered from degree and sectional genus by adjunction."""
        return 2 * self.sect_genus - 2 - self.degree

    @property
    def span_dim(self) -> int:
        return min(self.h0_H, AMBIENT_H0) - 1

    def chi_twist(self, m: int) -> int:
        """chi(O_S(mH)) by Riemann-Roch (vanishing assumed for h^1, h^2)."""
        return self.chi_O + (m * m * self.degree - m * self.HK) // 2


def abstract_surface(degree: int, sect_genus: int, K2: int, chi_O: int,
                     nodes: int = 0, label: str = "") -> SurfaceInvariants:
    """Build a record from (deg, g, K^2, chi(O)); chi_top and h0_H derived."""
    chi_top = 12 * chi_O - K2
    HK = 2 * sect_genus - 2 - degree
    h0 = chi_O + (degree - HK) // 2
    return SurfaceInvariants(degree, sect_genus, K2, chi_O, chi_top, h0,
                             nodes=nodes, provenance_label=label)


def expand(model: PlaneModel) -> DivisorClass:
    """The class H = a*L - sum m_j E_j, with n_i copies of multiplicity i."""
    mults: list[int] = []
    for i, n in enumerate(model.point_counts, start=1):
        mults.extend([i] * n)
    return DivisorClass(model.a, mults)


def _top_sum(sorted_desc: list[int], n: int) -> int:
    return sum(sorted_desc[:n])


def _subsets_with_sum(mults: list[int], size: int, target: int) -> list[tuple[int, ...]]:
    """Index tuples of ``size`` entries of ``mults`` summing to ``target``.

    Depth-first with prefix bounds; for H^2 >= 1 the number of solutions is
    at most k, so this stays small.
    """
    k = len(mults)
    order = sorted(range(k), key=lambda i: -mults[i])
    vals = [mults[i] for i in order]
    smallest = min(vals) if vals else 0
    out: list[tuple[int, ...]] = []

    def walk(pos: int, chosen: list[int], acc: int):
        need = size - len(chosen)
        if need == 0:
            if acc == target:
                out.append(tuple(sorted(order[i] for i in chosen)))
            return
        if pos >= k or k - pos < need:
            return
        best = acc + sum(vals[pos:pos + need])
        if best < target:
            return
        if acc + need * smallest > target:
            return
        walk(pos + 1, chosen + [pos], acc + vals[pos])
        walk(pos + 1, chosen, acc)

    walk(0, [], 0)
    return out


def normalize_contractions(h: DivisorClass) -> tuple[DivisorClass, tuple[DivisorClass, ...]]:
    """Detect and blow down catalogue (-1)-classes orthogonal to H.

    Returns the class on the reduced lattice (coordinates of contracted
    exceptional classes dropped) together with the contracted classes, always
    expressed on the input lattice.  By the Hodge index theorem the
    contracted classes are pairwise orthogonal once H^2 >= 1, so a single
    pass blows them all down.
    """
    a = h.plane_degree
    m = list(h.mults)
    k = len(m)
    if pair(h, h) < 1:
        raise ValueError(f"H^2 = {pair(h, h)} < 1: not an embedding class")

    contracted: list[DivisorClass] = []

    def exc(i: int) -> DivisorClass:
        mm = [0] * k
        mm[i] = -1
        return DivisorClass(0, mm)

    def line(idx) -> DivisorClass:
        mm = [0] * k
        for i in idx:
            mm[i] = 1
        return DivisorClass(1, mm)

    # E_i: H.E_i = m_i
    for i in range(k):
        if m[i] < 0:
            raise NotNef(f"H.E_{i + 1} = {m[i]} < 0 for H = {h}")
        if m[i] == 0:
            contracted.append(exc(i))
    # L - Ei - Ej: H.C = a - m_i - m_j
    for i in range(k):
        for j in range(i + 1, k):
            s = a - m[i] - m[j]
            if s < 0:
                raise NotNef(f"H.(L-E_{i + 1}-E_{j + 1}) = {s} < 0 for H = {h}")
            if s == 0:
                contracted.append(line((i, j)))
    desc = sorted(m, reverse=True)
    # 2L - (five E's): H.C = 2a - sum of five m's
    if k >= 5:
        if 2 * a - _top_sum(desc, 5) < 0:
            raise NotNef(f"a conic (-1)-class pairs negatively with H = {h}")
        for idx in _subsets_with_sum(m, 5, 2 * a):
            mm = [0] * k
            for i in idx:
                mm[i] = 1
            contracted.append(DivisorClass(2, mm))
    # 3L - 2Ei - (six E's): H.C = 3a - 2 m_i - sum of six others
    if k >= 7:
        for i in range(k):
            rest = sorted((m[j] for j in range(k) if j != i), reverse=True)
            if 3 * a - 2 * m[i] - _top_sum(rest, 6) < 0:
                raise NotNef(f"a cubic (-1)-class pairs negatively with H = {h}")
        for i in range(k):
            others = [(j, m[j]) for j in range(k) if j != i]
            hits = _subsets_with_sum([v for _, v in others], 6, 3 * a - 2 * m[i])
            for idx in hits:
                mm = [0] * k
                mm[i] = 2
                for pos in idx:
                    mm[others[pos][0]] = 1
                contracted.append(DivisorClass(3, mm))

    assert len(contracted) <= k, "more contractions than lattice rank"
    assert all(pair(c1, c2) == 0
               for n1, c1 in enumerate(contracted)
               for c2 in contracted[n1 + 1:]), "contracted classes must be orthogonal"

    # only zero-multiplicity coordinates can be dropped exactly; contractions
    # of L- or 2L-shape leave the blown-up-plane family, so H keeps its
    # representation and the bookkeeping lives in the contraction count
    keep = [i for i in range(k) if m[i] != 0]
    reduced = DivisorClass(a, [m[i] for i in keep])
    return reduced, tuple(contracted)


def invariants(model: PlaneModel) -> SurfaceInvariants:
    """Invariant record of the (normalized) image surface of a plane model."""
    h = expand(model)
    h_red, contracted = normalize_contractions(h)
    n_dropped = h.k - h_red.k
    n_blowdowns = len(contracted) - n_dropped
    degree = pair(h_red, h_red)
    g = adjunction_genus(h_red)
    h0 = riemann_roch_chi(h_red)
    if h0 < 4 and degree != 1:
        raise SpanTooSmall(
            f"{model} gives h0(H) = {h0}: the system maps to a plane without embedding"
        )
    K2 = 9 - h_red.k + n_blowdowns
    return SurfaceInvariants(
        degree=degree,
        sect_genus=g,
        K2=K2,
        chi_O=1,
        chi_top=12 - K2,
        h0_H=h0,
        nodes=0,
        provenance_label=str(model),
    )


def internal_projection(src: SurfaceInvariants) -> SurfaceInvariants:
    """Project from a general point on the surface: degree, K^2, h0 drop by 1,
    chi_top rises by 1; sectional genus and chi(O) are unchanged."""
    if src.nodes != 0 or not src.linearly_normal:
        raise NotProjectable("internal projection requires a smooth linearly "
                             "normal source")
    if src.h0_H < 5:
        raise NotProjectable(
            f"h0(H) = {src.h0_H} < 5: the projected image would be degenerate"
        )
    return replace(
        src,
        degree=src.degree - 1,
        K2=src.K2 - 1,
        chi_top=src.chi_top + 1,
        h0_H=src.h0_H - 1,
        provenance_label=f"internal projection of {src.provenance_label or 'surface'}",
    )


def external_projection(src: SurfaceInvariants) -> SurfaceInvariants:
    """Project a linearly normal surface in P^8 from a general outside point;
    all invariants survive, but the image in P^7 is no longer linearly normal."""
    if src.nodes != 0:
        raise NotProjectable("external projection requires a smooth image")
    if src.h0_H != 9 or not src.linearly_normal:
        raise NotProjectable(
            f"external projection needs a linearly normal surface spanning P^8, "
            f"got h0(H) = {src.h0_H}, linearly_normal = {src.linearly_normal}"
        )
    return replace(
        src,
        linearly_normal=False,
        provenance_label=f"external projection of {src.provenance_label or 'surface'}",
    )


def nodal_projection(src: SurfaceInvariants, delta: int) -> SurfaceInvariants:
    """Project from a point on the secant variety: the image acquires delta
    ordinary double points while the smooth model keeps its invariants."""
    if src.nodes != 0 or not src.linearly_normal:
        raise NotProjectable("nodal projection requires a smooth linearly "
                             "normal source")
    if src.h0_H < 9:
        raise NotProjectable(f"h0(H) = {src.h0_H} < 9: source must span at least P^8")
    if delta < 1:
        raise NotProjectable(f"delta must be >= 1, got {delta}")
    return replace(
        src,
        nodes=delta,
        linearly_normal=False,
        provenance_label=f"{delta}-nodal projection of {src.provenance_label or 'surface'}",
    )


# --- specification string grammar -----------------------------------------
#
#   "a;n1,n2,..."                       plane model
#   "abs:deg=D,g=G,K2=K,chiO=C"         abstract invariants
# optional whitespace-separated modifiers, applied left to right:
#   "int-proj"   internal projection
#   "ext-proj"   external projection
#   "nodes=D"    nodal projection with D nodes

_ABS_KEYS = ("deg", "g", "K2", "chiO")


def _parse_int(text: str, token: str, offset: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", text, offset) from None


def _parse_plane(text: str, base: str) -> PlaneModel:
    head, sep, tail = base.partition(";")
    if not sep:
        raise ParseError("expected 'a;n1,n2,...'", text, len(head))
    a = _parse_int(text, head, 0)
    counts: list[int] = []
    if tail:
        offset = len(head) + 1
        for token in tail.split(","):
            if token == "":
                raise ParseError("empty point count", text, offset)
            counts.append(_parse_int(text, token, offset))
            offset += len(token) + 1
    return PlaneModel(a, counts)


def _parse_abstract(text: str, base: str) -> SurfaceInvariants:
    body = base[len("abs:"):]
    fields: dict[str, int] = {}
    offset = text.find(body)
    for token in body.split(","):
        key, sep, val = token.partition("=")
        if not sep or key not in _ABS_KEYS:
            raise ParseError(f"expected one of {_ABS_KEYS} with '=', got {token!r}",
                             text, offset)
        if key in fields:
            raise ParseError(f"duplicate field {key!r}", text, offset)
        fields[key] = _parse_int(text, val, offset + len(key) + 1)
        offset += len(token) + 1
    missing = [k for k in _ABS_KEYS if k not in fields]
    if missing:
        raise ParseError(f"missing fields {missing}", text, len(text))
    return abstract_surface(fields["deg"], fields["g"], fields["K2"], fields["chiO"],
                            label=base)


def parse_surface_spec(text: str) -> SurfaceInvariants:
    """Parse a surface specification string into an invariant record.

    The final record must fit in P^7: a surface with h0(H) > 8 is rejected
    unless a projection modifier brings it down (or marks it non-normal).
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty surface specification", text, 0)
    parts = stripped.split()
    base = parts[0]
    if base.startswith("abs:"):
        s = _parse_abstract(text, base)
    else:
        s = invariants(_parse_plane(text, base))
    offset = len(base)
    for token in parts[1:]:
        if token == "int-proj":
            s = internal_projection(s)
        elif token == "ext-proj":
            s = external_projection(s)
        elif token.startswith("nodes="):
            s = nodal_projection(s, _parse_int(text, token[len("nodes="):], offset))
        else:
            raise ParseError(f"unknown modifier {token!r}", text, text.find(token))
        offset += len(token) + 1
    if s.h0_H > 9 or (s.h0_H == 9 and s.linearly_normal):
        raise SpanTooSmall(
            f"surface spans P^{s.h0_H - 1}: apply int-proj/ext-proj/nodes= to land in P^7"
        )
    return s
