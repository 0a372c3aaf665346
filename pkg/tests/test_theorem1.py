from __future__ import annotations

import pytest

from mcglantern.curves import is_closed, is_simple
from mcglantern.errors import AdjacentOnly, GenusTooSmall, NoSameHalfPair
from mcglantern.polygon import standard_surface, surface_from_pairs
from mcglantern.rotation import RotationMap, apply, hyperelliptic
from mcglantern.theorem1 import (
    CERTIFICATES,
    TheoremWitness,
    brute_force_search,
    construct_general,
    construct_standard,
    enumerate_curves,
    halves,
    inequality_holds,
    minimal_same_half_pairs,
    standard_curve,
    verify_pair,
    verify_witness,
)

from .test_curves import HYPER3

# minimal power found by the k-search for each instance of the construction
MINIMAL_K = {(3, 7): 2, (3, 14): 3, (4, 3): 1, (4, 6): 1, (4, 9): 2, (4, 18): 3, (5, 11): 2, (5, 22): 3}


def test_inequality():
    assert inequality_holds(3, 7)
    assert inequality_holds(4, 3)
    assert not inequality_holds(3, 2)
    with pytest.raises(ValueError):
        inequality_holds(3, 3)


@pytest.mark.parametrize("g,d", sorted(MINIMAL_K))
def test_construct_standard(g, d):
    rotation, witness = construct_standard(g, d)
    assert rotation.order == d
    assert witness.k == MINIMAL_K[(g, d)]
    report = verify_witness(standard_surface(g), rotation, witness)
    assert report.passed
    assert [c.name for c in report.items] == list(CERTIFICATES)
    assert all(c.passed and not c.waived for c in report.items)


def test_construct_standard_rejects():
    with pytest.raises(ValueError):
        construct_standard(3, 2)
    with pytest.raises(GenusTooSmall):
        construct_standard(2, 5)


def test_power_equal_to_order_fails_not_parallel():
    s3 = standard_surface(3)
    r = RotationMap(s3, 2)
    report = verify_witness(s3, r, TheoremWitness(standard_curve(3), 7))
    assert not report.passed
    assert not report["not_parallel"].passed
    assert report["intersection_zero"].passed


def test_bounding_pair_substituted_fails():
    s3 = standard_surface(3)
    report = verify_pair(s3, HYPER3, apply(hyperelliptic(3), HYPER3))
    assert not report["not_bounding_pair"].passed
    assert not report.passed


def test_hyperelliptic_waiver():
    s3 = standard_surface(3)
    report = verify_witness(s3, hyperelliptic(3), TheoremWitness(HYPER3, 1))
    assert report.passed
    assert report["not_bounding_pair"].waived
    assert "WAIVED" in report.lines()[3]


def test_halves():
    assert halves(8) == ([0, 1, 2, 3], [4, 5, 6, 7])
    assert halves(14) == (list(range(1, 7)), list(range(8, 14)))


def test_construct_general_genus2():
    s = surface_from_pairs(8, [(0, 2), (1, 3), (4, 6), (5, 7)])
    assert (0, 2) in minimal_same_half_pairs(s)
    w = construct_general(s, RotationMap(s, 4))
    assert w.k == 1 and w.certificates.passed
    assert str(w.curve) == "(0, 1/2)->(2, 1/2)"


def test_construct_general_errors():
    s3 = standard_surface(3)
    with pytest.raises(NoSameHalfPair):
        construct_general(s3, RotationMap(s3, 2))
    s = surface_from_pairs(8, [(0, 1), (2, 6), (3, 7), (4, 5)])
    with pytest.raises(AdjacentOnly):
        construct_general(s, RotationMap(s, 4))


def test_enumerated_curves_are_simple_and_closed():
    s2 = standard_surface(2)
    curves = list(enumerate_curves(s2, 3, 1))
    assert len(curves) == len(set(curves))
    assert all(is_simple(c) and is_closed(s2, c) for c in curves)


def test_brute_force_identity_is_absent():
    s3 = standard_surface(3)
    assert brute_force_search(s3, RotationMap(s3, 0), 2, 2) is None


def test_brute_force_hyperelliptic_g3():
    w = brute_force_search(standard_surface(3), hyperelliptic(3), 3, 4)
    assert w is not None and w.k == 1
    assert w.curve == HYPER3
    assert w.certificates.passed


def test_brute_force_agrees_with_construction():
    s3 = standard_surface(3)
    r = RotationMap(s3, 2)
    w = brute_force_search(s3, r, 2, 2)
    assert w is not None and w.certificates.passed
    _, constructed = construct_standard(3, 7)
    a = verify_witness(s3, r, w)
    b = verify_witness(s3, r, constructed)
    assert [c.passed for c in a.items] == [c.passed for c in b.items]
