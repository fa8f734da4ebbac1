"""Rank-2 intersection lattices and their discriminants.

Two sign conventions coexist: on the middle cohomology of the fourfold the
discriminant is the determinant of the matrix of <h^2, S>; on the Picard
lattice of a surface it is the opposite of the determinant of <H, K>.  Both
are positive for genuine geometric inputs (Riemann bilinear relations on the
fourfold side, the Hodge index theorem on the surface side), so the side is
stored explicitly rather than inferred from a sign.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .chow import CompleteIntersectionType, self_intersection
from .surfaces import SurfaceInvariants


class Side(enum.Enum):
    FOURFOLD_MIDDLE = "fourfold-middle"
    SURFACE_PICARD = "surface-picard"


@dataclass(frozen=True)
class RankTwoLattice:
    m11: int
    m12: int
    m22: int
    side: Side

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m12

    @property
    def matrix(self) -> list[list[int]]:
        return [[self.m11, self.m12], [self.m12, self.m22]]

    @property
    def degenerate(self) -> bool:
        return self.det == 0

    def __str__(self) -> str:
        return f"[[{self.m11},{self.m12}],[{self.m12},{self.m22}]]"


def fourfold_lattice(ci: CompleteIntersectionType, s: SurfaceInvariants,
                     node_correction: int = 2) -> RankTwoLattice:
    """The lattice <h^2, [S]> inside the middle cohomology of the fourfold."""
    return RankTwoLattice(
        m11=ci.fourfold_degree,
        m12=s.degree,
        m22=self_intersection(ci, s, node_correction=node_correction),
        side=Side.FOURFOLD_MIDDLE,
    )


def surface_matrix(degree: int, sect_genus: int, K2: int) -> RankTwoLattice:
    """The lattice <H, K> on a surface with the given degree, sectional genus
    and K^2; H.K comes from adjunction."""
    hk = 2 * sect_genus - 2 - degree
    return RankTwoLattice(m11=degree, m12=hk, m22=K2, side=Side.SURFACE_PICARD)


def surface_picard_matrix(s: SurfaceInvariants) -> RankTwoLattice:
    return surface_matrix(s.degree, s.sect_genus, s.K2)


def discriminant(lat: RankTwoLattice) -> int:
    """Signed by convention: det on the fourfold side, -det on the surface
    side.  Non-geometric inputs may come out non-positive; the raw value is
    returned either way."""
    if lat.side is Side.FOURFOLD_MIDDLE:
        return lat.det
    return -lat.det


ADMISSIBLE_RESIDUES = frozenset({0, 7, 12, 15})


class Mod16Class(NamedTuple):
    residue: int
    admissible: bool


def mod16_class(disc: int) -> Mod16Class:
    """Residue of a discriminant mod 16, and whether it lies in the set
    {0, 7, 12, 15} attainable on a (2,2,2)."""
    r = disc % 16
    return Mod16Class(r, r in ADMISSIBLE_RESIDUES)


def expected_residue(degree: int) -> int:
    """The forced residue (-deg^2) mod 16 of any (2,2,2) discriminant."""
    return (-degree * degree) % 16
