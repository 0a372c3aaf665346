"""Curves moved off themselves by a power of a periodic map.

For a rotation ``r`` of a glued polygon we look for a nonseparating simple
closed curve ``c`` and a power ``k`` with ``c`` and ``r^k(c)`` disjoint and
not isotopic, and (unless ``r`` acts as ``-I`` on homology) not a bounding
pair.  Every witness carries the evidence for each of these certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import lattice
from .curves import (
    BoundaryPoint,
    CurveDiagram,
    _interleaved,
    analyze_pair,
    check_closed,
    check_simple,
    glue_point,
    homology_class,
)
from .errors import (
    AdjacentOnly,
    CertificateFailure,
    GenusTooSmall,
    NoSameHalfPair,
    UnsupportedRotation,
)
from .polygon import PolygonSurface, standard_surface
from .rotation import RotationMap, apply, is_hyperelliptic_action, power

CERTIFICATES = ("intersection_zero", "not_parallel", "nonseparating", "not_bounding_pair")


@dataclass(frozen=True)
class Certificate:
    name: str
    passed: bool
    evidence: str
    waived: bool = False

    @property
    def ok(self) -> bool:
        return self.passed or self.waived


@dataclass(frozen=True)
class CertificateReport:
    items: tuple[Certificate, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.items)

    def __getitem__(self, name: str) -> Certificate:
        for c in self.items:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for c in self.items:
            status = "WAIVED" if c.waived and not c.passed else ("PASS" if c.passed else "FAIL")
            out.append(f"{c.name}: {status} ({c.evidence})")
        return out


@dataclass(frozen=True)
class TheoremWitness:
    curve: CurveDiagram
    k: int
    certificates: CertificateReport | None = field(default=None, compare=False)


def _require_genus(surface: PolygonSurface, minimum: int = 1):
    if surface.genus < minimum:
        raise GenusTooSmall(f"surface has genus {surface.genus}, need at least {minimum}")


def _fmt(v) -> str:
    return "(" + ", ".join(str(int(x)) for x in v) + ")"


def verify_witness(surface: PolygonSurface, rotation: RotationMap, witness: TheoremWitness) -> CertificateReport:
    """Recompute every certificate for ``(c, r^k(c))`` from scratch.

    The bounding-pair certificate is waived when the power acts as ``-I``
    on homology: the image of any curve is then homologous to it, so a
    disjoint non-isotopic image is necessarily a bounding pair.
    """
    _require_genus(surface)
    c = witness.curve
    check_closed(surface, c)
    check_simple(c)
    image = apply(power(rotation, witness.k), c)
    waive = is_hyperelliptic_action(power(rotation, witness.k))
    return verify_pair(surface, c, image, waive_bounding=waive)


def verify_pair(surface: PolygonSurface, a: CurveDiagram, b: CurveDiagram, waive_bounding: bool = False) -> CertificateReport:
    """The four certificates for an explicit pair of curves."""
    _require_genus(surface)
    for c in (a, b):
        check_closed(surface, c)
        check_simple(c)
    pa = analyze_pair(surface, a, b)
    waive = waive_bounding
    items = [
        Certificate(
            "intersection_zero",
            pa.disjoint,
            f"{pa.raw_crossings} diagram crossings, {pa.bigons_removed} bigons removed, i = {pa.intersection}",
        )
    ]
    if pa.disjoint and pa.b_min is not None:
        items.append(Certificate("not_parallel", not pa.parallel, f"cut profiles {list(pa.profiles)}"))
    else:
        items.append(Certificate("not_parallel", False, "curves are not disjoint"))
    nonsep = bool(np.any(pa.class_a)) and bool(np.any(pa.class_b))
    items.append(
        Certificate("nonseparating", nonsep, f"[c] = {_fmt(pa.class_a)}, [phi^k c] = {_fmt(pa.class_b)}")
    )
    if pa.disjoint and pa.b_min is not None:
        n_comp = len(pa.profiles)
        ev = f"homologous up to sign: {pa.homologous}, cut components {n_comp}"
        if waive:
            ev += "; waived: power acts as -I on homology"
        items.append(Certificate("not_bounding_pair", not pa.bounding, ev, waived=waive))
    else:
        items.append(Certificate("not_bounding_pair", False, "curves are not disjoint", waived=waive))
    return CertificateReport(tuple(items))


def _quick_reject(hc, hi, phi_is_minus_identity: bool) -> bool:
    """Cheap homological filters that rule a pair out before any cutting."""
    if lattice.pairing(hc, hi) != 0:
        return True
    if not phi_is_minus_identity and (np.array_equal(hc, hi) or np.array_equal(hc, -hi)):
        return True
    return False


def _first_power(surface, rotation, curve, require=True) -> TheoremWitness | None:
    if rotation.is_identity:
        return None
    hc = homology_class(surface, curve)
    if not np.any(hc):
        return None
    for k in range(1, rotation.order):
        rk = power(rotation, k)
        hi = homology_class(surface, apply(rk, curve))
        if _quick_reject(hc, hi, is_hyperelliptic_action(rk)):
            continue
        w = TheoremWitness(curve, k)
        report = verify_witness(surface, rotation, w)
        if report.passed:
            return TheoremWitness(curve, k, report)
    return None


# --- the (4g+2)-gon construction ---------------------------------------------------


def inequality_holds(g: int, d: int) -> bool:
    n = 4 * g + 2
    if d < 1 or n % d:
        raise ValueError(f"order {d} does not divide {n}")
    return n // d + 3 <= n // 2


def standard_curve(g: int) -> CurveDiagram:
    """The curve of the opposite-gluing construction on the (4g+2)-gon.

    It starts a quarter of the way along side 0, runs to three quarters of
    the way along side 2, re-enters on side 2g+3 and closes up with a chord
    hugging side 2g+2.
    """
    q, tq = Fraction(1, 4), Fraction(3, 4)
    return CurveDiagram(
        (
            BoundaryPoint(0, q),
            BoundaryPoint(2, tq),
            BoundaryPoint(2 * g + 3, q),
            BoundaryPoint(2 * g + 1, tq),
        )
    )


def construct_standard(g: int, d: int) -> tuple[RotationMap, TheoremWitness]:
    if g < 3:
        raise GenusTooSmall(f"construction needs genus at least 3, got {g}")
    if d < 3:
        raise ValueError(f"construction needs order at least 3, got {d}")
    if not inequality_holds(g, d):
        raise ValueError(f"(4g+2)/d + 3 <= 2g+1 fails for g={g}, d={d}")
    surface = standard_surface(g)
    rotation = RotationMap(surface, (4 * g + 2) // d)
    witness = _first_power(surface, rotation, standard_curve(g))
    if witness is None:
        raise CertificateFailure(f"no power certifies the standard curve for g={g}, d={d}")
    return rotation, witness


# --- polygons with a same-half gluing -------------------------------------------------


def halves(n_sides: int) -> tuple[list[int], list[int]]:
    """The two halves of the boundary cut by the axis through corner 0.

    When ``n/2`` is odd the axis passes through the midpoints of sides 0 and
    ``n/2`` instead, and those two sides belong to neither half.
    """
    h = n_sides // 2
    if h % 2:
        return list(range(1, h)), list(range(h + 1, n_sides))
    return list(range(0, h)), list(range(h, n_sides))


def minimal_same_half_pairs(surface: PolygonSurface) -> list[tuple[int, int]]:
    out = []
    for half in halves(surface.n_sides):
        members = set(half)
        for e1 in half:
            e2 = surface.partner(e1)
            if e2 in members and e1 < e2:
                between = range(e1 + 1, e2)
                if not any(surface.partner(s) in between for s in between):
                    out.append((e1, e2))
    return out


def construct_general(surface: PolygonSurface, rotation: RotationMap) -> TheoremWitness:
    """Single-chord curve through a minimal same-half pair, moved off by a power."""
    _require_genus(surface)
    if rotation.is_identity:
        raise UnsupportedRotation("the identity has no power moving a curve")
    pairs = minimal_same_half_pairs(surface)
    if not pairs:
        raise NoSameHalfPair("no side is glued to a side in the same half")
    usable = [(e1, e2) for e1, e2 in pairs if e2 - e1 > 1]
    if not usable:
        raise AdjacentOnly("every minimal same-half pair is adjacent (cone point)")
    for e1, e2 in usable:
        p = BoundaryPoint(e1, Fraction(1, 2))
        curve = CurveDiagram((p, glue_point(surface, p)))
        witness = _first_power(surface, rotation, curve)
        if witness is not None:
            return witness
    raise CertificateFailure("no power certifies a minimal same-half curve")


# --- exhaustive oracle -------------------------------------------------------------------


def position_grid(surface: PolygonSurface, q: int) -> list[BoundaryPoint]:
    return [BoundaryPoint(s, Fraction(i, q + 1)) for s in range(surface.n_sides) for i in range(1, q + 1)]


def enumerate_curves(surface: PolygonSurface, max_chords: int, grid: int):
    """Simple closed chord diagrams on the grid, by chord count then lexicographically.

    Each curve is listed once per orientation: the first entry point is the
    smallest entry point of the curve.
    """
    pts = position_grid(surface, grid)
    for m in range(1, max_chords + 1):
        for p0 in pts:
            close = glue_point(surface, p0)
            yield from _extend(surface, pts, m, p0, close, [p0], [], {p0.position})


def _extend(surface, pts, m, p0, close, seq, chords, used):
    entry = seq[-1]
    last = len(chords) == m - 1
    candidates = [close] if last else pts
    for ex in candidates:
        if ex.position in used:
            continue
        chord = (entry.position, ex.position)
        if any(_interleaved(chord, c) for c in chords):
            continue
        if last:
            yield CurveDiagram(tuple(seq + [ex]))
            continue
        nxt = glue_point(surface, ex)
        # close is reserved for the final exit; p0 must stay the least entry
        if nxt <= p0 or nxt.position in used or nxt == close or ex == close:
            continue
        used2 = used | {ex.position, nxt.position}
        yield from _extend(surface, pts, m, p0, close, seq + [ex, nxt], chords + [chord], used2)


def brute_force_search(surface: PolygonSurface, rotation: RotationMap, max_chords: int, position_grid: int):
    """First grid curve (in enumeration order) with a certified power, or ``None``."""
    if max_chords < 1:
        raise ValueError("max_chords must be at least 1")
    _require_genus(surface)
    if rotation.is_identity:
        return None
    for curve in enumerate_curves(surface, max_chords, position_grid):
        witness = _first_power(surface, rotation, curve)
        if witness is not None:
            return witness
    return None
