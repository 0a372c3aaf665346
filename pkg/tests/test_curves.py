from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcglantern import lattice
from mcglantern.curves import (
    BoundaryPoint,
    algebraic_intersection,
    analyze_pair,
    check_closed,
    check_simple,
    crossing_count,
    cut_along,
    geometric_intersection,
    glue_point,
    homology_class,
    is_bounding_pair,
    is_closed,
    is_nonseparating,
    is_parallel,
    is_simple,
    minimal_position,
    parallel_copy,
    parse_curve,
)
from mcglantern.errors import NotClosed, NotSimple, ParseError
from mcglantern.polygon import standard_surface, surface_from_pairs
from mcglantern.rotation import RotationMap, apply, hyperelliptic
from mcglantern.theorem1 import enumerate_curves, standard_curve

from .conftest import chord_curve

TORUS = surface_from_pairs(4, [(0, 2), (1, 3)])
HEX_TORUS = standard_surface(1)
TORUS_CURVES = list(enumerate_curves(TORUS, 3, 2))
HEX_CURVES = list(enumerate_curves(HEX_TORUS, 2, 2))
S2 = standard_surface(2)
S2_CURVES = list(enumerate_curves(S2, 2, 2))

# the g = 3 curve found by the exhaustive search for the hyperelliptic involution
HYPER3 = chord_curve((0, "1/5"), (1, "1/5"), (8, "4/5"), (9, "1/5"), (2, "4/5"), (7, "4/5"))


def test_glue_point():
    s3 = standard_surface(3)
    assert glue_point(s3, BoundaryPoint(0, Fraction(1, 4))) == BoundaryPoint(7, Fraction(3, 4))
    assert glue_point(TORUS, BoundaryPoint(1, Fraction(1, 2))) == BoundaryPoint(3, Fraction(1, 2))


def test_point_parameter_range():
    with pytest.raises(ValueError):
        BoundaryPoint(0, Fraction(0))
    with pytest.raises(ValueError):
        BoundaryPoint(0, Fraction(1))


def test_simple_examples():
    assert is_simple(chord_curve((0, "1/2"), (2, "1/2")))
    crossing = chord_curve((0, "1/3"), (2, "1/3"), (1, "1/2"), (3, "1/2"))
    assert not is_simple(crossing)
    with pytest.raises(NotSimple) as info:
        check_simple(crossing)
    assert info.value.pair == (0, 1)
    assert is_simple(standard_curve(3))


def test_closed_check():
    s3 = standard_surface(3)
    check_closed(s3, standard_curve(3))
    with pytest.raises(NotClosed):
        check_closed(TORUS, chord_curve((0, "1/2"), (1, "1/2")))
    assert not is_closed(TORUS, chord_curve((0, "1/2"), (3, "1/2")))


def test_torus_intersections():
    a = chord_curve((0, "1/2"), (2, "1/2"))
    b = chord_curve((1, "1/2"), (3, "1/2"))
    assert geometric_intersection(TORUS, a, b) == 1
    assert abs(algebraic_intersection(TORUS, a, b)) == 1
    assert algebraic_intersection(TORUS, a, a) == 0
    assert list(homology_class(TORUS, a)) == [1, 0]
    assert list(homology_class(TORUS, b)) == [0, -1]
    assert is_nonseparating(TORUS, a)


def test_parallel_copy_is_disjoint_and_parallel():
    s3 = standard_surface(3)
    c = standard_curve(3)
    c2 = parallel_copy(s3, c)
    assert geometric_intersection(s3, c, c2) == 0
    assert is_parallel(s3, c, c2)
    assert not is_bounding_pair(s3, c, c2)


def test_standard_curve_homology_and_cut():
    s3 = standard_surface(3)
    c = standard_curve(3)
    hc = homology_class(s3, c)
    assert list(hc) == [2, 1, -1, 0, 0, 0]
    assert lattice.is_primitive(hc)
    assert is_nonseparating(s3, c)
    assert cut_along(s3, [c]) == [(2, 2)]


def test_witness_pair_37():
    s3 = standard_surface(3)
    c = standard_curve(3)
    assert apply(RotationMap(s3, 2), c) == c.shifted(2, 14)
    image = apply(RotationMap(s3, 4), c)  # phi^2 for the order-7 rotation phi
    assert geometric_intersection(s3, c, image) == 0
    assert cut_along(s3, [c, image]) == [(1, 4)]
    assert not is_bounding_pair(s3, c, image)
    assert not is_parallel(s3, c, image)


def test_disk_bounding_curve():
    s3 = standard_surface(3)
    d = chord_curve((0, "1/3"), (0, "2/3"), (7, "1/3"), (7, "2/3"))
    assert is_closed(s3, d) and is_simple(d)
    assert not np.any(homology_class(s3, d))
    assert not is_nonseparating(s3, d)
    assert cut_along(s3, [d]) == [(0, 1), (3, 1)]


def test_bounding_pair_on_14_gon():
    s3 = standard_surface(3)
    image = apply(hyperelliptic(3), HYPER3)
    pa = analyze_pair(s3, HYPER3, image)
    assert pa.raw_crossings == 2 and pa.bigons_removed == 1 and pa.intersection == 0
    assert list(pa.profiles) == [(1, 2), (1, 2)]
    assert is_bounding_pair(s3, HYPER3, image)
    assert not is_parallel(s3, HYPER3, image)


def test_different_classes_not_parallel():
    s3 = standard_surface(3)
    c = standard_curve(3)
    image = apply(RotationMap(s3, 4), c)
    assert not np.array_equal(homology_class(s3, c), homology_class(s3, image))
    assert not is_parallel(s3, c, image)


def test_minimal_position_removes_bigons():
    s3 = standard_surface(3)
    image = apply(hyperelliptic(3), HYPER3)
    b_min, count, removed = minimal_position(s3, HYPER3, image)
    assert count == 0 and removed == 1
    assert crossing_count(HYPER3, b_min) == 0


def test_curve_text_roundtrip():
    c = standard_curve(4)
    assert parse_curve(c.to_text()) == c
    with pytest.raises(ParseError):
        parse_curve("curve 1\npoint 0 1/2\n")
    with pytest.raises(ParseError):
        parse_curve("curve 1\npoint 0 1/2\npoint 2 3/2\n")


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(TORUS_CURVES), st.sampled_from(TORUS_CURVES))
def test_torus_geometric_equals_abs_algebraic(a, b):
    assert geometric_intersection(TORUS, a, b) == abs(algebraic_intersection(TORUS, a, b))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(HEX_CURVES), st.sampled_from(HEX_CURVES))
def test_hexagonal_torus_geometric_equals_abs_algebraic(a, b):
    assert geometric_intersection(HEX_TORUS, a, b) == abs(algebraic_intersection(HEX_TORUS, a, b))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(S2_CURVES), st.sampled_from(S2_CURVES), st.integers(0, 9))
def test_genus2_intersection_properties(a, b, shift):
    i = geometric_intersection(S2, a, b)
    alg = algebraic_intersection(S2, a, b)
    assert i == geometric_intersection(S2, b, a)
    assert i >= abs(alg) and (i - alg) % 2 == 0
    assert i <= crossing_count(a, b)
    assert alg == lattice.pairing(homology_class(S2, a), homology_class(S2, b))
    r = RotationMap(S2, shift)
    assert i == geometric_intersection(S2, apply(r, a), apply(r, b))
