"""The action on first homology: twists as transvections, periodic maps as
integer symplectic matrices, and exact checks of the lantern relation and
of the six-conjugate factorisation.

Equality of matrices here is a necessary condition only.  The kernel of
the symplectic representation (the Torelli group) is invisible to it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lattice
from .curves import homology_class
from .errors import (
    GenusTooSmall,
    HyperellipticExcluded,
    MCGError,
    NotPrimitive,
    PairingMismatch,
    UnassignedLabel,
    VerificationFailed,
)
from .rotation import RotationMap, apply, homology_action, is_hyperelliptic_action, power
from .words import (
    ALPHA1,
    ALPHA2,
    GAMMA1,
    GAMMA2,
    LANTERN_LABELS,
    PHI,
    X1,
    X2,
    X3,
    McgWord,
    conjugate_blocks,
    conjugate_by,
    lantern_sides,
    theorem14_word,
    twist,
    word,
)


def vector(coords) -> np.ndarray:
    return np.array([int(x) for x in coords], dtype=object)


def transvection(v) -> np.ndarray:
    """Matrix of ``x -> x + <x, v> v`` with ``<x, v> = x^T J v``."""
    v = vector(v)
    n = len(v)
    j = lattice.standard_form(n // 2)
    return lattice.identity(n) + np.outer(v, j @ v)


def _check_symplectic(m: np.ndarray, what: str) -> np.ndarray:
    if not lattice.is_symplectic(m):
        raise VerificationFailed(f"{what} is not symplectic")
    return m


# --- basis completion -----------------------------------------------------------------


def _extend_to_basis(vs: list[np.ndarray], slots: list[int], n: int) -> np.ndarray:
    """A symplectic basis (as matrix columns ``a1, b1, ...``) with ``vs[i]`` in column ``slots[i]``."""
    j = lattice.standard_form(n // 2)
    cols: dict[int, np.ndarray] = {}
    if len(vs) == 2 and slots == [0, 1]:
        cols[0], cols[1] = vs
    else:
        # isotropic vectors in slots a1, a2; find dual b's with <b_i, b_j> = 0
        rows = [v @ j for v in vs]
        duals = lattice.solve_dual(rows)
        if len(duals) == 2:
            t = lattice.pairing(duals[0], duals[1], j)
            duals[1] = duals[1] + t * vs[0]
        for v, b, s in zip(vs, duals, slots):
            cols[s], cols[s + 1] = v, b
    used = sorted(cols)
    pairs = [(cols[s], cols[s + 1]) for s in used[::2]]

    def project(x):
        out = x.copy()
        for a, b in pairs:
            out = out - lattice.pairing(x, b, j) * a + lattice.pairing(x, a, j) * b
        return out

    rest = [project(lattice.identity(n)[:, k]) for k in range(n)]
    extra = lattice.symplectic_basis(rest, j) if n > len(used) else []
    if len(extra) != n - len(used):
        raise NotPrimitive("vectors do not extend to a symplectic basis")
    basis = [cols[s] for s in used] + list(extra)
    m = np.array(basis, dtype=object).T
    return _check_symplectic(m, "completed basis")


def _slots(vs, j) -> tuple[list[np.ndarray], list[int]]:
    if len(vs) == 1:
        return vs, [0]
    p = lattice.pairing(vs[0], vs[1], j)
    if p == 0:
        return vs, [0, 2]
    if p == 1:
        return vs, [0, 1]
    if p == -1:
        return [vs[1], vs[0]], [0, 1]
    raise NotPrimitive(f"pairing {p} between the vectors: they span no unimodular sublattice")


def symplectic_completion(sources, targets) -> np.ndarray:
    """Some ``M`` in ``Sp(2g, Z)`` with ``M @ sources[i] == targets[i]``.

    Both lists have one or two primitive vectors.  For two vectors their
    pairing must agree and lie in ``{-1, 0, 1}``, and together they must
    span a saturated sublattice (as for disjoint curves that are not a
    bounding pair, or for curves meeting once).
    """
    sources = [vector(v) for v in sources]
    targets = [vector(v) for v in targets]
    if len(sources) != len(targets) or len(sources) not in (1, 2):
        raise ValueError("need one or two source vectors and as many targets")
    n = len(sources[0])
    if n % 2 or n == 0 or any(len(v) != n for v in sources + targets):
        raise ValueError("vectors must share an even positive length")
    for v in sources + targets:
        if not lattice.is_primitive(v):
            raise NotPrimitive(f"vector {list(v)} is not primitive")
    j = lattice.standard_form(n // 2)
    if len(sources) == 2:
        ps = lattice.pairing(sources[0], sources[1], j)
        pt = lattice.pairing(targets[0], targets[1], j)
        if ps != pt:
            raise PairingMismatch(f"source pairing {ps} differs from target pairing {pt}")
    svs, slots = _slots(sources, j)
    tvs, _ = _slots(targets, j)
    s = _extend_to_basis(svs, slots, n)
    t = _extend_to_basis(tvs, slots, n)
    m = t @ lattice.symplectic_inverse(s)
    for a, b in zip(sources, targets):
        if not np.array_equal(m @ a, b):
            raise VerificationFailed("completion does not map sources to targets")
    return _check_symplectic(m, "completion")


# --- lantern -----------------------------------------------------------------------------


def lantern_homology_classes(g: int) -> dict[str, np.ndarray]:
    """Classes of the seven lantern curves in the standard basis ``a1, b1, ...``."""
    if g < 3:
        raise GenusTooSmall(f"the lantern embedding needs genus at least 3, got {g}")

    def a(*ks):
        v = [0] * (2 * g)
        for k in ks:
            v[2 * k - 2] += 1
        return vector(v)

    return {
        ALPHA1: a(1),
        ALPHA2: a(2),
        X1: a(3),
        GAMMA2: a(1, 2, 3),
        GAMMA1: a(1, 2),
        X3: a(2, 3),
        X2: a(1, 3),
    }


def evaluate_word(w: McgWord, assignment) -> np.ndarray:
    """Image of ``w`` under twists to transvections and map symbols to matrices.

    ``assignment`` maps a twist label to its homology class and a map label
    to its matrix.  Letters multiply left to right.
    """
    if not assignment:
        raise UnassignedLabel("empty assignment")
    n = len(next(iter(assignment.values())))
    result = lattice.identity(n)
    for gen in w:
        if gen.label not in assignment:
            raise UnassignedLabel(f"label {gen.label!r} is not assigned")
        val = assignment[gen.label]
        if gen.kind == "T":
            m = transvection(val)
            m = m if gen.exponent == 1 else lattice.symplectic_inverse(m)
        else:
            m = np.asarray(val, dtype=object)
            m = m if gen.exponent == 1 else lattice.symplectic_inverse(m)
        result = result @ m
    return result


def verify_lantern_homology(g: int, classes=None, form: str = "product") -> bool:
    """Both sides of the lantern relation agree as transvection products."""
    classes = lantern_homology_classes(g) if classes is None else classes
    left, right = lantern_sides(LANTERN_LABELS, form)
    return bool(np.array_equal(evaluate_word(left, classes), evaluate_word(right, classes)))


# --- six conjugates ------------------------------------------------------------------------

LANTERN_PAIRS = ((GAMMA1, GAMMA2), (X3, X1), (X2, ALPHA2))
MAP_SYMBOLS = ("f", "g", "h")
PSI_SYMBOLS = ("psi_f", "psi_g", "psi_h")


@dataclass(frozen=True)
class StepReport:
    map_label: str
    source: str
    target: str
    k: int
    witness_classes: tuple[tuple[int, ...], tuple[int, ...]]
    maps_source: bool


@dataclass(frozen=True)
class Theorem14Report:
    genus: int
    order: int
    shift: int
    steps: tuple[StepReport, ...]
    word: McgWord
    census: int | None
    evaluated: np.ndarray
    expected: np.ndarray

    @property
    def equal(self) -> bool:
        return bool(np.array_equal(self.evaluated, self.expected))

    @property
    def passed(self) -> bool:
        return self.equal and self.census == 6 and all(s.maps_source for s in self.steps)

    def lines(self) -> list[str]:
        out = [f"genus {self.genus} order {self.order} shift {self.shift}"]
        for s in self.steps:
            a, b = s.witness_classes
            out.append(
                f"step {s.map_label}: {s.source} -> {s.target} via phi^{s.k}, "
                f"witness classes {list(a)} {list(b)}, maps source: {s.maps_source}"
            )
        out.append(f"word: {self.word}")
        out.append(f"conjugate census: {self.census}")
        out.append("evaluated word:")
        out += format_matrix(self.evaluated).splitlines()
        out.append("transvection of [alpha1]:")
        out += format_matrix(self.expected).splitlines()
        out.append(f"equal: {self.equal}")
        out.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return out


def verify_theorem14_homology(g: int, rotation: RotationMap, witnesses) -> Theorem14Report:
    """Evaluate the six-conjugate word for ``T_alpha1`` in ``Sp(2g, Z)``.

    Each witness ``(c, k)`` supplies a pair ``c, phi^k(c)`` of disjoint
    curves that are neither isotopic nor a bounding pair.  Step ``m`` maps
    the lantern pair ``(source, target)`` onto it by ``psi`` and sets
    ``m = psi^-1 phi^k psi``, which sends ``source`` to ``target``.
    """
    surface = rotation.surface
    if surface.genus != g:
        raise ValueError(f"rotation lives on genus {surface.genus}, not {g}")
    if is_hyperelliptic_action(rotation):
        raise HyperellipticExcluded("the hyperelliptic involution is excluded")
    witnesses = list(witnesses)
    if len(witnesses) != 3:
        raise ValueError("need three witnesses, one per lantern pair")
    classes = lantern_homology_classes(g)
    phi = homology_action(rotation)
    assignment: dict[str, np.ndarray] = dict(classes)
    assignment[PHI] = phi
    steps = []
    for m_label, psi_label, (src, tgt), wit in zip(MAP_SYMBOLS, PSI_SYMBOLS, LANTERN_PAIRS, witnesses):
        c = homology_class(surface, wit.curve)
        ck = homology_class(surface, apply(power(rotation, wit.k), wit.curve))
        try:
            psi = symplectic_completion([classes[src], classes[tgt]], [c, ck])
        except MCGError as exc:
            raise type(exc)(f"step {m_label} ({src} -> {tgt}) with k = {wit.k}: {exc}") from exc
        f = lattice.symplectic_inverse(psi) @ lattice.matrix_power(phi, wit.k) @ psi
        image = f @ classes[src]
        ok = bool(np.array_equal(image, classes[tgt]) or np.array_equal(image, -classes[tgt]))
        assignment[psi_label] = psi
        steps.append(StepReport(m_label, src, tgt, wit.k, (tuple(c), tuple(ck)), ok))
    w = theorem14_word(*(wit.k for wit in witnesses), psi=PSI_SYMBOLS)
    blocks = conjugate_blocks(w)
    return Theorem14Report(
        genus=g,
        order=rotation.order,
        shift=rotation.shift,
        steps=tuple(steps),
        word=w,
        census=None if blocks is None else len(blocks),
        evaluated=evaluate_word(w, assignment),
        expected=transvection(classes[ALPHA1]),
    )


@dataclass(frozen=True)
class StlCertificate:
    bound: int
    twist_class: tuple[int, ...]
    statement: str
    word: McgWord

    def lines(self) -> list[str]:
        return [
            "mcg-lantern v1",
            f"bound {self.bound}",
            f"twist class {list(self.twist_class)}",
            f"statement {self.statement}",
            f"word {self.word}",
        ]


def stl_bound_report(report: Theorem14Report, curve_class=None) -> StlCertificate:
    """The certified bound ``tl_phi(T_c) <= 6``, hence ``stl_phi(T_c) <= 6``.

    Without ``curve_class`` the certificate is for ``T_alpha1``.  Otherwise
    ``psi_c`` is a completion sending ``[c]`` to ``[alpha1]``, the word is
    conjugated by ``psi_c`` and re-evaluated against ``transvection([c])``.
    """
    if not report.passed:
        raise VerificationFailed("refusing to certify a bound from a failed verification")
    w = report.word
    if curve_class is None:
        cls = lantern_homology_classes(report.genus)[ALPHA1]
    else:
        cls = vector(curve_class)
        psi_c = symplectic_completion([cls], [lantern_homology_classes(report.genus)[ALPHA1]])
        w = conjugate_by(w, "psi_c")
        evaluated = lattice.symplectic_inverse(psi_c) @ report.evaluated @ psi_c
        blocks = conjugate_blocks(w)
        if blocks is None or len(blocks) != 6 or not np.array_equal(evaluated, transvection(cls)):
            raise VerificationFailed("conjugated factorisation does not check out")
    statement = "tl_phi(T_c) <= 6, hence stl_phi(T_c) <= 6 by subadditivity"
    return StlCertificate(6, tuple(int(x) for x in cls), statement, w)


# --- text output ---------------------------------------------------------------------------


def format_matrix(m) -> str:
    """Row-major integers, one row per line."""
    m = np.asarray(m, dtype=object)
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in m)


def parse_matrix(text: str) -> np.ndarray:
    rows = [[int(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged or empty matrix")
    return lattice.intmat(rows)


__all__ = [
    "transvection",
    "symplectic_completion",
    "lantern_homology_classes",
    "verify_lantern_homology",
    "evaluate_word",
    "verify_theorem14_homology",
    "stl_bound_report",
    "format_matrix",
    "parse_matrix",
    "Theorem14Report",
    "StlCertificate",
    "twist",
    "word",
]
