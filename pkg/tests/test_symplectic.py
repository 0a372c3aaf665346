from __future__ import annotations

import random

import numpy as np
import pytest

from mcglantern import lattice
from mcglantern.errors import GenusTooSmall, HyperellipticExcluded, NotPrimitive, PairingMismatch, UnassignedLabel
from mcglantern.polygon import standard_surface
from mcglantern.rotation import RotationMap, hyperelliptic
from mcglantern.symplectic import (
    evaluate_word,
    format_matrix,
    lantern_homology_classes,
    parse_matrix,
    stl_bound_report,
    symplectic_completion,
    transvection,
    verify_lantern_homology,
    verify_theorem14_homology,
)
from mcglantern.theorem1 import TheoremWitness, construct_standard
from mcglantern.words import LANTERN_LABELS, McgWord, lantern_sides, parse_word, theorem14_word, twist, word

from .test_curves import HYPER3


def random_symplectic(rng, g, steps=12):
    m = lattice.identity(2 * g)
    for _ in range(steps):
        v = [rng.randint(-1, 1) for _ in range(2 * g)]
        m = m @ transvection(v)
    return m


def test_transvection_examples():
    assert np.array_equal(transvection([0, 0, 0, 0]), lattice.identity(4))
    assert transvection([1, 0]).tolist() == [[1, -1], [0, 1]]
    v = [1, 2, -1, 0]
    assert np.array_equal(transvection(v), transvection([-x for x in v]))
    t = transvection(v)
    assert lattice.is_symplectic(t) and lattice.determinant(t) == 1
    assert list(t @ np.array(v, dtype=object)) == v


def test_transvection_moves_along_v():
    rng = random.Random(3)
    for _ in range(50):
        v = [rng.randint(-3, 3) for _ in range(4)]
        x = np.array([rng.randint(-3, 3) for _ in range(4)], dtype=object)
        d = transvection(v) @ x - x
        assert np.array_equal(d, lattice.pairing(x, v) * np.array(v, dtype=object))


def test_completion_examples():
    e1 = [1, 0, 0, 0, 0, 0]
    m = symplectic_completion([e1], [e1])
    assert lattice.is_symplectic(m) and list(m @ np.array(e1, dtype=object)) == e1
    target = [1, 0, 2, 0, 0, 0]
    m = symplectic_completion([e1], [target])
    assert lattice.is_symplectic(m)
    assert list(m @ np.array(e1, dtype=object)) == target
    with pytest.raises(PairingMismatch):
        symplectic_completion([[1, 0], [0, 1]], [[1, 0], [1, 0]])
    with pytest.raises(NotPrimitive):
        symplectic_completion([[2, 0]], [[2, 0]])


def test_lantern_classes():
    c = lantern_homology_classes(3)
    for a in LANTERN_LABELS:
        assert lattice.is_primitive(c[a])
        for b in LANTERN_LABELS:
            assert lattice.pairing(c[a], c[b]) == 0
    assert np.array_equal(c["gamma2"], c["alpha1"] + c["alpha2"] + c["x1"])
    with pytest.raises(GenusTooSmall):
        lantern_homology_classes(2)


@pytest.mark.parametrize("g", [3, 4, 5])
def test_lantern_homology(g):
    assert verify_lantern_homology(g)
    assert verify_lantern_homology(g, form="solved")


def test_corrupted_lantern_fails():
    c = dict(lantern_homology_classes(3))
    c["gamma1"] = c["alpha1"]
    assert not verify_lantern_homology(3, c)


def test_evaluate_word():
    c = lantern_homology_classes(3)
    assert np.array_equal(evaluate_word(McgWord(), c), lattice.identity(6))
    w = parse_word("T[x1] T[gamma2]^-1 T[x3]")
    assert np.array_equal(evaluate_word(w * w.inverse(), c), lattice.identity(6))
    left, right = lantern_sides()
    diff = evaluate_word(right, c) - evaluate_word(left, c)
    assert not np.any(diff)
    with pytest.raises(UnassignedLabel):
        evaluate_word(word(twist("nope")), c)


def test_evaluate_word_homomorphism():
    rng = random.Random(11)
    g = 3
    assignment = {"a": random_symplectic(rng, g), "b": random_symplectic(rng, g), "u": [1, 0, 0, 1, 0, 0]}
    alphabet = ["a", "a^-1", "b", "b^-1", "T[u]", "T[u]^-1"]
    for _ in range(30):
        w1 = parse_word(" ".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6))))
        w2 = parse_word(" ".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6))))
        assert np.array_equal(evaluate_word(w1 * w2, assignment), evaluate_word(w1, assignment) @ evaluate_word(w2, assignment))


@pytest.mark.parametrize("g,d", [(3, 7), (3, 14), (4, 3), (4, 9)])
def test_theorem14_shadow(g, d):
    rotation, witness = construct_standard(g, d)
    report = verify_theorem14_homology(g, rotation, [witness] * 3)
    assert report.equal and report.census == 6 and report.passed
    assert np.array_equal(report.evaluated, transvection(lantern_homology_classes(g)["alpha1"]))
    cert = stl_bound_report(report)
    assert cert.bound == 6


def test_theorem14_rejects_hyperelliptic():
    with pytest.raises(HyperellipticExcluded):
        verify_theorem14_homology(3, hyperelliptic(3), [TheoremWitness(HYPER3, 1)] * 3)


def test_bounding_pair_witness_is_unusable():
    # phi^7 of the order-14 rotation is the hyperelliptic involution; its image of HYPER3
    # is homologous to HYPER3, so no completion exists
    s3 = standard_surface(3)
    with pytest.raises(NotPrimitive):
        verify_theorem14_homology(3, RotationMap(s3, 1), [TheoremWitness(HYPER3, 7)] * 3)


def test_stl_refuses_failed_report():
    rotation, witness = construct_standard(3, 7)
    report = verify_theorem14_homology(3, rotation, [witness] * 3)
    broken = type(report)(**{**report.__dict__, "census": 5})
    with pytest.raises(Exception):
        stl_bound_report(broken)


def test_stl_for_conjugated_twist():
    rotation, witness = construct_standard(3, 7)
    report = verify_theorem14_homology(3, rotation, [witness] * 3)
    cert = stl_bound_report(report, [2, 1, -1, 0, 0, 0])
    assert cert.bound == 6 and cert.twist_class == (2, 1, -1, 0, 0, 0)


def test_theorem14_word_with_mixed_powers_evaluates():
    rotation, witness = construct_standard(3, 7)
    from mcglantern.theorem1 import _first_power

    assert _first_power(rotation.surface, rotation, witness.curve).k == 2
    w = theorem14_word(2, 2, 2)
    assert str(w).count("phi") == 12


def test_matrix_text_roundtrip():
    m = transvection([1, 2, 0, 1])
    assert np.array_equal(parse_matrix(format_matrix(m)), m)
    assert format_matrix(transvection([1, 0])) == "1 -1\n0 1\n"
