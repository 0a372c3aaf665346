from __future__ import annotations

import numpy as np
import pytest

from mcglantern import lattice
from mcglantern.curves import geometric_intersection, homology_class
from mcglantern.errors import UnsupportedRotation
from mcglantern.polygon import standard_surface, surface_from_pairs
from mcglantern.rotation import (
    RotationMap,
    apply,
    homology_action,
    hyperelliptic,
    is_hyperelliptic_action,
    power,
    rotation_of_order,
)
from mcglantern.theorem1 import enumerate_curves, standard_curve


def test_apply_identity_and_order():
    s3 = standard_surface(3)
    c = standard_curve(3)
    assert apply(RotationMap(s3, 0), c) == c
    r = RotationMap(s3, 2)
    assert r.order == 7
    img = c
    for _ in range(r.order):
        img = apply(r, img)
    assert img == c
    assert apply(r, c) == c.shifted(2, 14)


def test_power():
    s3 = standard_surface(3)
    r = RotationMap(s3, 2)
    assert power(r, r.order).shift == 0
    assert power(r, 1) == r
    assert power(RotationMap(s3, 1), 7) == hyperelliptic(3)


def test_hyperelliptic():
    h = hyperelliptic(3)
    assert h.shift == 7 and h.order == 2
    assert np.array_equal(homology_action(h), -lattice.identity(6))
    for g in (1, 2, 4):
        assert is_hyperelliptic_action(hyperelliptic(g))
    s3 = standard_surface(3)
    classes = {frozenset(c) for c in s3.vertex_cycles}
    moved = {frozenset((x + 7) % 14 for x in c) for c in s3.vertex_cycles}
    assert classes == moved


def test_homology_action():
    s3 = standard_surface(3)
    assert np.array_equal(homology_action(RotationMap(s3, 0)), lattice.identity(6))
    m = homology_action(RotationMap(s3, 2))
    assert lattice.is_symplectic(m) and lattice.determinant(m) == 1
    assert np.array_equal(lattice.matrix_power(m, 7), lattice.identity(6))
    assert not np.array_equal(m, lattice.identity(6))


def test_homology_action_is_natural():
    s2 = standard_surface(2)
    for shift in (1, 2, 5):
        r = RotationMap(s2, shift)
        m = homology_action(r)
        for c in list(enumerate_curves(s2, 2, 1))[:40]:
            assert np.array_equal(m @ homology_class(s2, c), homology_class(s2, apply(r, c)))


def test_rotation_preserves_intersection():
    s2 = standard_surface(2)
    curves = list(enumerate_curves(s2, 2, 1))[:12]
    r = RotationMap(s2, 3)
    for a in curves:
        for b in curves[:4]:
            assert geometric_intersection(s2, a, b) == geometric_intersection(s2, apply(r, a), apply(r, b))


def test_bad_rotation():
    s = surface_from_pairs(8, [(0, 2), (1, 3), (4, 6), (5, 7)])
    with pytest.raises(UnsupportedRotation):
        RotationMap(s, 1)
    assert rotation_of_order(s, 2).shift == 4
    with pytest.raises(UnsupportedRotation):
        rotation_of_order(standard_surface(3), 3)
