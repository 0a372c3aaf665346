"""Exact integer linear algebra for alternating forms.

Matrices are numpy arrays with ``dtype=object`` so every entry is a Python
int and nothing overflows.
"""

from __future__ import annotations

import numpy as np

from .errors import NotPrimitive


def intmat(rows) -> np.ndarray:
    a = np.array(rows, dtype=object)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    return a


def identity(n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return m


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=object)


def standard_form(g: int) -> np.ndarray:
    """The 2g x 2g block matrix J with diagonal blocks [[0, 1], [-1, 0]]."""
    j = zeros((2 * g, 2 * g))
    for k in range(g):
        j[2 * k, 2 * k + 1] = 1
        j[2 * k + 1, 2 * k] = -1
    return j


def pairing(x, y, form=None) -> int:
    x = np.asarray(x, dtype=object)
    y = np.asarray(y, dtype=object)
    if form is None:
        form = standard_form(len(x) // 2)
    return int(x @ form @ y)


def is_symplectic(m: np.ndarray) -> bool:
    n = m.shape[0]
    if m.shape != (n, n) or n % 2:
        return False
    j = standard_form(n // 2)
    return bool(np.array_equal(m.T @ j @ m, j))


def symplectic_inverse(m: np.ndarray) -> np.ndarray:
    """Inverse of a symplectic matrix, ``J^-1 M^T J``."""
    j = standard_form(m.shape[0] // 2)
    return -(j @ m.T @ j)


def determinant(m: np.ndarray) -> int:
    import sympy

    return int(sympy.Matrix(m.tolist()).det())


def matrix_power(m: np.ndarray, k: int) -> np.ndarray:
    if k < 0:
        m, k = symplectic_inverse(m), -k
    result = identity(m.shape[0])
    base = m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def is_primitive(v) -> bool:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def skew_normal_form(gram) -> tuple[np.ndarray, list[int]]:
    """Reduce an alternating integer Gram matrix by a unimodular change of basis.

    Returns ``(P, divisors)`` such that ``P.T @ gram @ P`` is block diagonal
    with blocks ``[[0, d], [-d, 0]]`` for ``d`` in ``divisors`` followed by a
    zero block.  Columns of ``P`` are the new basis vectors.  The pivot is
    always the entry of least absolute value, scanning rows then columns in
    index order, so the result is deterministic.
    """
    g = intmat(gram).copy()
    m = g.shape[0]
    p = identity(m)

    def add(target, source, q):
        p[:, target] += q * p[:, source]
        g[:, target] += q * g[:, source]
        g[target, :] += q * g[source, :]

    def swap(a, b):
        if a == b:
            return
        p[:, [a, b]] = p[:, [b, a]]
        g[:, [a, b]] = g[:, [b, a]]
        g[[a, b], :] = g[[b, a], :]

    def negate(a):
        p[:, a] = -p[:, a]
        g[:, a] = -g[:, a]
        g[a, :] = -g[a, :]

    divisors = []
    k = 0
    while k + 1 < m:
        best = None
        for i in range(k, m):
            for jj in range(i + 1, m):
                v = g[i, jj]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, jj)
        if best is None:
            break
        _, i, jj = best
        swap(k, i)
        if jj == k:
            jj = i
        swap(k + 1, jj)
        if g[k, k + 1] < 0:
            negate(k + 1)
        d = g[k, k + 1]
        clean = True
        for col in range(k + 2, m):
            q = -(g[k, col] // d)
            if q:
                add(col, k + 1, q)
            q = g[k + 1, col] // d
            if q:
                add(col, k, q)
            if g[k, col] or g[k + 1, col]:
                clean = False
        if clean:
            divisors.append(int(d))
            k += 2
    return p, divisors


def symplectic_basis(vectors, form) -> list[np.ndarray]:
    """A symplectic basis ``a1, b1, ..., ag, bg`` of the lattice spanned by ``vectors``
    modulo the radical of ``form``.

    Raises ``NotPrimitive`` when the induced form is not unimodular.
    """
    vs = [np.asarray(v, dtype=object) for v in vectors]
    if not vs:
        return []
    mat = np.array(vs, dtype=object).T
    gram = mat.T @ form @ mat
    p, divisors = skew_normal_form(gram)
    if any(d != 1 for d in divisors):
        raise NotPrimitive(f"form is not unimodular on the span (divisors {divisors})")
    cols = mat @ p
    return [cols[:, i].copy() for i in range(2 * len(divisors))]


def column_hermite(a) -> tuple[np.ndarray, np.ndarray]:
    """Column-reduce ``a`` (r x n) to ``[H | 0]`` with ``H`` lower triangular.

    Returns ``(h, u)`` with ``a @ u == [h | 0]`` and ``u`` unimodular.
    """
    a = intmat(a).copy()
    r, n = a.shape
    u = identity(n)

    def colop(target, source, q):
        a[:, target] -= q * a[:, source]
        u[:, target] -= q * u[:, source]

    for i in range(r):
        if i >= n:
            break
        while True:
            nz = [c for c in range(i, n) if a[i, c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda c: (abs(a[i, c]), c))
            if piv != i:
                a[:, [i, piv]] = a[:, [piv, i]]
                u[:, [i, piv]] = u[:, [piv, i]]
            done = True
            for c in range(i + 1, n):
                if a[i, c]:
                    colop(c, i, a[i, c] // a[i, i])
                    if a[i, c]:
                        done = False
            if done:
                break
        if a[i, i] < 0:
            a[:, i] = -a[:, i]
            u[:, i] = -u[:, i]
    return a[:, :r].copy(), u


def solve_dual(rows) -> list[np.ndarray]:
    """Integer vectors ``x_i`` with ``rows @ x_i = e_i``.

    The rows must span a saturated sublattice of the dual; otherwise
    ``NotPrimitive`` is raised.
    """
    a = intmat(rows)
    r = a.shape[0]
    h, u = column_hermite(a)
    if any(h[i, i] != 1 for i in range(r)):
        raise NotPrimitive("vectors do not span a primitive sublattice")
    sols = []
    for i in range(r):
        y = [0] * r
        for row in range(r):
            rhs = (1 if row == i else 0) - sum(h[row, c] * y[c] for c in range(row))
            y[row] = rhs  # diagonal entry is 1
        x = u[:, :r] @ np.array(y, dtype=object)
        sols.append(x)
    return sols
