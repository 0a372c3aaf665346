from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcglantern import lattice
from mcglantern.errors import NotPrimitive


def test_standard_form():
    j = lattice.standard_form(2)
    assert j.tolist() == [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    assert lattice.is_symplectic(lattice.identity(4))


def test_skew_normal_form_divisors():
    gram = lattice.intmat([[0, 2, 0], [-2, 0, 4], [0, -4, 0]])
    p, divisors = lattice.skew_normal_form(gram)
    assert divisors == [2]
    reduced = p.T @ gram @ p
    assert reduced[0, 1] == 2 and reduced[1, 0] == -2
    assert not np.any(reduced[2:, :]) and not np.any(reduced[:, 2:])
    assert abs(lattice.determinant(p)) == 1


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=15, max_size=15))
def test_skew_normal_form_random(entries):
    n = 6
    gram = lattice.zeros((n, n))
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            v = next(it)
            gram[i, j], gram[j, i] = v, -v
    p, divisors = lattice.skew_normal_form(gram)
    assert abs(lattice.determinant(p)) == 1
    reduced = p.T @ gram @ p
    expected = lattice.zeros((n, n))
    for k, d in enumerate(divisors):
        expected[2 * k, 2 * k + 1], expected[2 * k + 1, 2 * k] = d, -d
    assert np.array_equal(reduced, expected)
    assert all(d > 0 for d in divisors)
    # blocks are not normalised to a divisibility chain; the rank is what matters
    import sympy

    assert 2 * len(divisors) == sympy.Matrix(gram.tolist()).rank()


def test_symplectic_basis_rejects_non_unimodular():
    j = lattice.standard_form(1)
    with pytest.raises(NotPrimitive):
        lattice.symplectic_basis([[2, 0], [0, 1]], j)


def test_solve_dual():
    rows = [[2, 3, 0, 0], [0, 0, 1, 5]]
    xs = lattice.solve_dual(rows)
    a = lattice.intmat(rows)
    assert (a @ xs[0]).tolist() == [1, 0]
    assert (a @ xs[1]).tolist() == [0, 1]
    with pytest.raises(NotPrimitive):
        lattice.solve_dual([[2, 4, 0, 0]])


def test_matrix_power_and_inverse():
    m = lattice.intmat([[1, 1], [0, 1]])
    assert lattice.matrix_power(m, 3).tolist() == [[1, 3], [0, 1]]
    assert lattice.matrix_power(m, -2).tolist() == [[1, -2], [0, 1]]
    assert np.array_equal(m @ lattice.symplectic_inverse(m), lattice.identity(2))


def test_is_primitive():
    assert lattice.is_primitive([2, 3, 0])
    assert not lattice.is_primitive([2, 4, 0])
    assert not lattice.is_primitive([0, 0])
