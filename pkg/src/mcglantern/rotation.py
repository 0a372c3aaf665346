"""Periodic maps realised as rotations of a glued polygon."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from . import lattice
from .curves import CurveDiagram, homology_basis
from .errors import UnsupportedRotation
from .polygon import PolygonSurface, rotation_shifts, standard_surface


@dataclass(frozen=True)
class RotationMap:
    """Rotation of the polygon by ``shift`` sides counterclockwise.

    Any shift that commutes with the gluing is accepted as a periodic map.
    """

    surface: PolygonSurface
    shift: int

    def __post_init__(self):
        n = self.surface.n_sides
        object.__setattr__(self, "shift", self.shift % n)
        if self.shift not in _shifts(self.surface):
            raise UnsupportedRotation(
                f"shift {self.shift} does not preserve the gluing of this {n}-gon"
            )

    @property
    def order(self) -> int:
        n = self.surface.n_sides
        return n // gcd(n, self.shift)

    @property
    def is_identity(self) -> bool:
        return self.shift == 0


@lru_cache(maxsize=64)
def _shifts(surface: PolygonSurface) -> frozenset:
    return frozenset(rotation_shifts(surface))


def rotation_of_order(surface: PolygonSurface, d: int) -> RotationMap:
    """The rotation of order ``d`` with the smallest positive shift."""
    n = surface.n_sides
    for s in sorted(_shifts(surface)):
        if s and n // gcd(n, s) == d:
            return RotationMap(surface, s)
    if d == 1:
        return RotationMap(surface, 0)
    raise UnsupportedRotation(f"no gluing-preserving rotation of order {d} on this {n}-gon")


def apply(r: RotationMap, c: CurveDiagram) -> CurveDiagram:
    return c.shifted(r.shift, r.surface.n_sides)


def power(r: RotationMap, k: int) -> RotationMap:
    return RotationMap(r.surface, k * r.shift)


def hyperelliptic(g: int) -> RotationMap:
    """Rotation by pi of the standard (4g+2)-gon."""
    return RotationMap(standard_surface(g), 2 * g + 1)


def dual_loop_permutation(r: RotationMap) -> np.ndarray:
    """Signed permutation matrix of the rotation on dual-loop chains."""
    surface = r.surface
    n = surface.n_sides
    pairs = surface.pairing.edge_pairs()
    index = {p: k for k, p in enumerate(pairs)}
    m = len(pairs)
    sigma = lattice.zeros((m, m))
    for k, (i, j) in enumerate(pairs):
        a, b = (i + r.shift) % n, (j + r.shift) % n
        if a < b:
            sigma[index[(a, b)], k] = 1
        else:
            sigma[index[(b, a)], k] = -1
    return sigma


def homology_action(r: RotationMap) -> np.ndarray:
    """Matrix of the rotation on H_1 in the surface's symplectic basis."""
    hb = homology_basis(r.surface)
    sigma = dual_loop_permutation(r)
    cols = [hb.coords(sigma @ v) for v in hb.basis]
    if not cols:
        return lattice.zeros((0, 0))
    return np.array(cols, dtype=object).T


def is_hyperelliptic_action(r: RotationMap) -> bool:
    m = homology_action(r)
    return m.size > 0 and bool(np.array_equal(m, -lattice.identity(m.shape[0])))
