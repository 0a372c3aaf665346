"""Simple closed curves drawn as chord diagrams in the polygon.

A curve is a cyclic list of boundary points ``p0, p1, ..., p(2m-1)``.  The
chords are ``(p0, p1), (p2, p3), ...`` (entry point, exit point) and the
curve leaves the polygon at every exit and re-enters at the glued point,
so ``glue(p(2i+1)) == p(2i+2)`` cyclically.

Positions along the boundary circle are ``side + t`` with ``t`` an exact
``Fraction``; all crossing decisions reduce to comparisons of positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import numpy as np

from . import lattice
from .errors import CrossingInput, InternalError, NotClosed, NotSimple, ParseError
from .polygon import PolygonSurface


@dataclass(frozen=True, order=True)
class BoundaryPoint:
    side: int
    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not 0 < t < 1:
            raise ValueError(f"point parameter must lie in (0, 1), got {t}")
        object.__setattr__(self, "position", self.side + t)

    def __str__(self):
        return f"({self.side}, {self.t})"


def glue_point(surface: PolygonSurface, p: BoundaryPoint) -> BoundaryPoint:
    return BoundaryPoint(surface.partner(p.side), 1 - p.t)


@dataclass(frozen=True)
class CurveDiagram:
    points: tuple[BoundaryPoint, ...]

    def __post_init__(self):
        pts = tuple(p if isinstance(p, BoundaryPoint) else BoundaryPoint(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts or len(pts) % 2:
            raise ValueError("a curve needs a positive even number of points")

    @property
    def n_chords(self) -> int:
        return len(self.points) // 2

    def chords(self) -> list[tuple[BoundaryPoint, BoundaryPoint]]:
        p = self.points
        return [(p[2 * i], p[2 * i + 1]) for i in range(len(p) // 2)]

    def crossings(self) -> list[tuple[BoundaryPoint, BoundaryPoint]]:
        """Side crossings ``(exit, entry)``; crossing ``i`` follows chord ``i``."""
        p = self.points
        return [(p[2 * i + 1], p[(2 * i + 2) % len(p)]) for i in range(len(p) // 2)]

    def shifted(self, shift: int, n_sides: int) -> "CurveDiagram":
        return CurveDiagram(tuple(BoundaryPoint((q.side + shift) % n_sides, q.t) for q in self.points))

    def reversed(self) -> "CurveDiagram":
        p = self.points
        return CurveDiagram((p[1], p[0]) + tuple(reversed(p[2:])))

    def to_text(self) -> str:
        lines = [f"curve {self.n_chords}"]
        lines += [f"point {q.side} {q.t.numerator}/{q.t.denominator}" for q in self.points]
        return "\n".join(lines) + "\n"

    def __str__(self):
        return " ".join(f"{a}->{b}" for a, b in self.chords())


def curve_from_crossings(crossings) -> CurveDiagram:
    """Curve through the cyclic list of ``(exit, entry)`` side crossings."""
    crossings = list(crossings)
    if not crossings:
        raise InternalError("a curve must cross the polygon boundary")
    pts = [crossings[-1][1]]
    for k, (ex, en) in enumerate(crossings):
        pts.append(ex)
        if k < len(crossings) - 1:
            pts.append(en)
    return CurveDiagram(tuple(pts))


def is_closed(surface: PolygonSurface, curve: CurveDiagram) -> bool:
    return all(glue_point(surface, ex) == en for ex, en in curve.crossings()) and all(
        0 <= q.side < surface.n_sides for q in curve.points
    )


def check_closed(surface: PolygonSurface, curve: CurveDiagram):
    for k, (ex, en) in enumerate(curve.crossings()):
        if not 0 <= ex.side < surface.n_sides or not 0 <= en.side < surface.n_sides:
            raise NotClosed(f"crossing {k} uses a side outside the {surface.n_sides}-gon")
        if glue_point(surface, ex) != en:
            raise NotClosed(f"exit {ex} is not glued to the next entry {en}")


# --- boundary-circle combinatorics -----------------------------------------


def _in_open_arc(x, start, end) -> bool:
    """Whether ``x`` lies strictly inside the counterclockwise arc start -> end."""
    if start < end:
        return start < x < end
    return x > start or x < end


def _interleaved(c1, c2) -> bool:
    a, b = c1
    return _in_open_arc(c2[0], a, b) != _in_open_arc(c2[1], a, b)


def _chord_positions(curve: CurveDiagram):
    return [(a.position, b.position) for a, b in curve.chords()]


def _cross_sign(c1, c2) -> int:
    """+1 when chord ``c2`` crosses ``c1`` from its left to its right."""
    p, q = c1
    # left of p->q is the arc q -> p, right is p -> q
    if _in_open_arc(c2[0], q, p) and _in_open_arc(c2[1], p, q):
        return 1
    return -1


def is_simple(curve: CurveDiagram) -> bool:
    return _first_defect(curve) is None


def _first_defect(curve: CurveDiagram):
    positions = [q.position for q in curve.points]
    if len(set(positions)) != len(positions):
        return ("repeated point", None)
    chords = _chord_positions(curve)
    for i in range(len(chords)):
        for j in range(i + 1, len(chords)):
            if _interleaved(chords[i], chords[j]):
                return ("crossing chords", (i, j))
    return None


def check_simple(curve: CurveDiagram):
    defect = _first_defect(curve)
    if defect is not None:
        kind, pair = defect
        if pair is None:
            raise NotSimple(f"curve is not simple: {kind}")
        raise NotSimple(f"curve is not simple: chords {pair[0]} and {pair[1]} cross", pair)


def crossing_count(c1: CurveDiagram, c2: CurveDiagram) -> int:
    ch1, ch2 = _chord_positions(c1), _chord_positions(c2)
    return sum(1 for a in ch1 for b in ch2 if _interleaved(a, b))


def algebraic_intersection(surface: PolygonSurface, c1: CurveDiagram, c2: CurveDiagram) -> int:
    """Signed crossing count, +1 where ``c2`` crosses ``c1`` left to right."""
    if _shares_point(c1, c2):
        c2 = push_off(surface, c2, c1)
    ch1, ch2 = _chord_positions(c1), _chord_positions(c2)
    return sum(_cross_sign(a, b) for a in ch1 for b in ch2 if _interleaved(a, b))


def _shares_point(c1: CurveDiagram, c2: CurveDiagram) -> bool:
    return bool({q.position for q in c1.points} & {q.position for q in c2.points})


def _side_points(surface, curves):
    """Sorted parameters of all curve points, grouped by side."""
    by_side: dict[int, list[Fraction]] = {s: [] for s in range(surface.n_sides)}
    for c in curves:
        for q in c.points:
            by_side[q.side].append(q.t)
    for s in by_side:
        by_side[s].sort()
    return by_side


def _gap(by_side, p: BoundaryPoint, direction: int) -> Fraction:
    ts = by_side[p.side]
    if direction > 0:
        nxt = [t for t in ts if t > p.t]
        return (min(nxt) if nxt else Fraction(1)) - p.t
    prv = [t for t in ts if t < p.t]
    return p.t - (max(prv) if prv else Fraction(0))


def _push_crossings(surface, crossings, sign: int, by_side):
    """Parallel copy of a strand: exits move by ``sign`` along their side.

    Moving exits by ``+`` and entries by ``-`` pushes the strand to its left.
    Each point moves a third of the way to its nearest neighbour so two
    strands pushed towards each other stay apart.
    """
    out = []
    for ex, _en in crossings:
        delta = _gap(by_side, ex, sign) / 3
        new_ex = BoundaryPoint(ex.side, ex.t + sign * delta)
        out.append((new_ex, glue_point(surface, new_ex)))
    return out


def push_off(surface: PolygonSurface, curve: CurveDiagram, *others: CurveDiagram) -> CurveDiagram:
    """An isotopic parallel copy of ``curve`` (pushed left) avoiding the points of ``others``."""
    by_side = _side_points(surface, (curve,) + others)
    return curve_from_crossings(_push_crossings(surface, curve.crossings(), 1, by_side))


def parallel_copy(surface: PolygonSurface, curve: CurveDiagram, side: int = 1) -> CurveDiagram:
    by_side = _side_points(surface, (curve,))
    return curve_from_crossings(_push_crossings(surface, curve.crossings(), side, by_side))


# --- overlay arrangement ----------------------------------------------------


@dataclass
class Region:
    """A connected component of the surface minus the drawn curves."""

    faces: list[int]
    chi: int
    sides: list[tuple[int, str]]
    corners: list[tuple]

    @property
    def boundary_count(self) -> int:
        return len(self.sides)

    @property
    def genus(self) -> int:
        return (2 - self.chi - self.boundary_count) // 2

    @property
    def profile(self) -> tuple[int, int]:
        return (self.genus, self.boundary_count)


class Arrangement:
    """Planar subdivision of the polygon by the chords of several curves,
    with faces glued across side segments into surface regions.

    Chords of one curve never cross each other; chords of different curves
    may cross, provided that the chords crossing any single chord are
    pairwise disjoint (always the case for two curves).
    """

    def __init__(self, surface: PolygonSurface, curves):
        self.surface = surface
        self.curves = list(curves)
        n = surface.n_sides
        pos_all = [q.position for c in self.curves for q in c.points]
        if len(set(pos_all)) != len(pos_all):
            raise InternalError("arrangement needs pairwise distinct boundary points")
        # positions are rescaled to integers; corners sit at multiples of scale
        scale = 1
        for x in pos_all:
            scale = lcm(scale, x.denominator)
        self.scale = scale
        self.chords = {}
        for ci, c in enumerate(self.curves):
            for k, (a, b) in enumerate(c.chords()):
                self.chords[(ci, k)] = (int(a.position * scale), int(b.position * scale))

        # crossings and their order along each chord
        on_chord: dict[tuple, list] = {key: [] for key in self.chords}
        self.crossing_keys = []
        keys = list(self.chords)
        for i, ka in enumerate(keys):
            for kb in keys[i + 1:]:
                if ka[0] == kb[0]:
                    continue
                if _interleaved(self.chords[ka], self.chords[kb]):
                    x = (ka, kb)
                    self.crossing_keys.append(x)
                    on_chord[ka].append(x)
                    on_chord[kb].append(x)
        self.along = {}
        for key, xs in on_chord.items():
            p, q = self.chords[key]

            def rank(x, key=key, p=p, q=q):
                other = x[1] if x[0] == key else x[0]
                a, b = self.chords[other]
                r = a if _in_open_arc(a, p, q) else b
                return (r - p) % (n * scale)

            self.along[key] = sorted(xs, key=rank)

        self._build_graph()
        self._trace_faces()
        self._build_regions()

    # vertices: ("b", position) for boundary vertices, ("x", crossing) for crossings
    def _build_graph(self):
        n = self.surface.n_sides
        sc = self.scale
        self.edges = []  # (tail, head, info)
        bpos = sorted({k * sc for k in range(n)} | {p for ch in self.chords.values() for p in ch})
        self.arc_edge = {}
        for i, pos in enumerate(bpos):
            nxt = bpos[(i + 1) % len(bpos)]
            side = pos // sc
            t0 = pos - side * sc
            # corners are boundary vertices, so an arc never leaves its side
            t1 = (nxt if nxt != 0 else n * sc) - side * sc
            eid = len(self.edges)
            self.edges.append((("b", pos), ("b", nxt), ("arc", side, t0, t1)))
            self.arc_edge[pos] = eid
        self.bpos = bpos
        self.piece_edges = {}  # chord key -> list of edge ids in order
        for key, (p, q) in self.chords.items():
            verts = [("b", p)] + [("x", x) for x in self.along[key]] + [("b", q)]
            ids = []
            for k in range(len(verts) - 1):
                eid = len(self.edges)
                self.edges.append((verts[k], verts[k + 1], ("piece", key, k)))
                ids.append(eid)
            self.piece_edges[key] = ids

        rot: dict[tuple, list] = {}
        prev_arc = {bpos[(i + 1) % len(bpos)]: self.arc_edge[bpos[i]] for i in range(len(bpos))}
        chord_at = {}
        for key, (p, q) in self.chords.items():
            chord_at[p] = (self.piece_edges[key][0], 0)
            chord_at[q] = (self.piece_edges[key][-1], 1)
        for pos in bpos:
            darts = [(self.arc_edge[pos], 0)]
            if pos in chord_at:
                darts.append(chord_at[pos])
            darts.append((prev_arc[pos], 1))
            rot[("b", pos)] = darts
        for x in self.crossing_keys:
            ka, kb = x
            p, q = self.chords[ka]
            ia = self.along[ka].index(x)
            ib = self.along[kb].index(x)
            a_fwd = (self.piece_edges[ka][ia + 1], 0)
            a_back = (self.piece_edges[ka][ia], 1)
            b_fwd = (self.piece_edges[kb][ib + 1], 0)
            b_back = (self.piece_edges[kb][ib], 1)
            r, s = self.chords[kb]
            if _in_open_arc(s, q, p):  # b ends on the left of a
                rot[("x", x)] = [a_fwd, b_fwd, a_back, b_back]
            else:
                rot[("x", x)] = [a_fwd, b_back, a_back, b_fwd]
        self.rot = rot

    def _head(self, dart):
        e = self.edges[dart[0]]
        return e[1] if dart[1] == 0 else e[0]

    def _trace_faces(self):
        self.face_of = {}
        self.faces = []
        outer = None
        for eid in range(len(self.edges)):
            for d in ((eid, 0), (eid, 1)):
                if d in self.face_of:
                    continue
                fid = len(self.faces)
                cyc = []
                cur = d
                while cur not in self.face_of:
                    self.face_of[cur] = fid
                    cyc.append(cur)
                    v = self._head(cur)
                    back = (cur[0], 1 - cur[1])
                    lst = self.rot[v]
                    cur = lst[lst.index(back) - 1]
                if cur != d:
                    raise InternalError("face tracing did not close up")
                self.faces.append(cyc)
                if any(self.edges[e][2][0] == "arc" and o == 1 for e, o in cyc):
                    if outer is not None and outer != fid:
                        raise InternalError("more than one outer face")
                    outer = fid
        self.outer = outer

    def _build_regions(self):
        surface = self.surface
        parent = {f: f for f in range(len(self.faces)) if f != self.outer}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        segs = {}
        for eid, (_u, _v, info) in enumerate(self.edges):
            if info[0] == "arc":
                _, side, t0, t1 = info
                segs[(side, t0, t1)] = eid
        pairs_count = {}
        for (side, t0, t1), eid in segs.items():
            partner = segs.get((surface.partner(side), self.scale - t1, self.scale - t0))
            if partner is None:
                raise InternalError(f"side segment {(side, t0, t1)} has no glued partner")
            union(self.face_of[(eid, 0)], self.face_of[(partner, 0)])
        for cyc in surface.vertex_cycles:
            fs = [self.face_of[(self.arc_edge[c * self.scale], 0)] for c in cyc]
            for f in fs[1:]:
                union(fs[0], f)
        for (side, t0, t1), eid in segs.items():
            r = find(self.face_of[(eid, 0)])
            pairs_count[r] = pairs_count.get(r, 0) + 1

        groups: dict[int, list[int]] = {}
        for f in parent:
            groups.setdefault(find(f), []).append(f)
        vert_count: dict[int, int] = {}
        for cyc in surface.vertex_cycles:
            r = find(self.face_of[(self.arc_edge[cyc[0] * self.scale], 0)])
            vert_count[r] = vert_count.get(r, 0) + 1

        side_region = {}
        for ci, c in enumerate(self.curves):
            first = self.piece_edges[(ci, 0)][0]
            side_region[(ci, "L")] = find(self.face_of[(first, 0)])
            side_region[(ci, "R")] = find(self.face_of[(first, 1)])
        self.side_region = side_region

        regions = {}
        for r, fs in sorted(groups.items()):
            if pairs_count.get(r, 0) % 2:
                raise InternalError("odd number of glued segments in a region")
            chi = len(fs) - pairs_count.get(r, 0) // 2 + vert_count.get(r, 0)
            corners = []
            for f in fs:
                for d in self.faces[f]:
                    h = self._head(d)
                    if h[0] == "x":
                        corners.append(h[1])
            sides = sorted(k for k, v in side_region.items() if v == r)
            regions[r] = Region(sorted(fs), chi, sides, corners)
        self.regions = regions
        self.region_of_face = {f: find(f) for f in parent}

    def piece_sides(self, key, k):
        """Regions to the left and right of piece ``k`` of chord ``key``."""
        eid = self.piece_edges[key][k]
        left = self.face_of[(eid, 0)]
        right = self.face_of[(eid, 1)]
        return self.region_of_face[left], self.region_of_face[right]


# --- bigon removal ------------------------------------------------------------


def _curve_items(arr: Arrangement, ci: int):
    """Cyclic sequence of ``("piece", key, k)`` and ``("x", crossing)`` items along curve ``ci``."""
    items = []
    for k in range(arr.curves[ci].n_chords):
        key = (ci, k)
        xs = arr.along[key]
        for j in range(len(xs) + 1):
            items.append(("piece", key, j))
            if j < len(xs):
                items.append(("x", xs[j]))
    return items


def _forward_arc(items, x, y):
    """Items strictly between crossing ``x`` and crossing ``y`` going forward."""
    i = items.index(("x", x))
    out = []
    k = (i + 1) % len(items)
    while items[k] != ("x", y):
        out.append(items[k])
        k = (k + 1) % len(items)
        if k == i:
            raise InternalError("crossing not found on curve")
    return out


def _arc_crossings(curve: CurveDiagram, pieces):
    """Side crossings passed by a forward run of pieces."""
    out = []
    cr = curve.crossings()
    # two pieces are adjacent only across a side crossing
    for prev, nxt in zip(pieces, pieces[1:]):
        if prev[0] == "piece" and nxt[0] == "piece":
            out.append(cr[prev[1][1]])
    return out


def _bordering_side(arr, pieces, region):
    sides = set()
    for it in pieces:
        if it[0] != "piece":
            continue
        left, right = arr.piece_sides(it[1], it[2])
        sides.add("L" if left == region else ("R" if right == region else None))
    if len(sides) == 1 and None not in sides:
        return sides.pop()
    return None


def _find_bigon(arr: Arrangement):
    for rid, reg in arr.regions.items():
        if reg.chi == 1 and len(reg.corners) == 2 and reg.corners[0] != reg.corners[1]:
            return rid, reg
    return None


def _remove_bigon(surface, a: CurveDiagram, b: CurveDiagram, arr: Arrangement, rid, reg):
    x, y = reg.corners
    items_b = _curve_items(arr, 1)
    arc = _forward_arc(items_b, x, y)
    if _bordering_side(arr, arc, rid) is None:
        x, y = y, x
        arc = _forward_arc(items_b, x, y)
        if _bordering_side(arr, arc, rid) is None:
            raise InternalError("bigon has no boundary arc on the second curve")
    # the kept part of b runs from y forward to x
    kept = _arc_crossings(b, _forward_arc(items_b, y, x))

    items_a = _curve_items(arr, 0)
    fwd = _forward_arc(items_a, x, y)
    side = _bordering_side(arr, fwd, rid)
    if side is not None:
        strand = _arc_crossings(a, fwd)
    else:
        bwd = _forward_arc(items_a, y, x)
        side = _bordering_side(arr, bwd, rid)
        if side is None:
            raise InternalError("bigon has no boundary arc on the first curve")
        strand = [(en, ex) for ex, en in reversed(_arc_crossings(a, bwd))]
        side = "R" if side == "L" else "L"
    # push the strand away from the bigon: left pushes exits by +
    sign = -1 if side == "L" else 1
    by_side = _side_points(surface, (a, b))
    pushed = _push_crossings(surface, strand, sign, by_side)
    new = kept + pushed
    if not new:
        return None
    return curve_from_crossings(new)


def minimal_position(surface: PolygonSurface, a: CurveDiagram, b: CurveDiagram):
    """Isotope ``b`` by bigon removals until ``a`` and ``b`` are in minimal position.

    Returns ``(b_min, crossings, removed)`` where ``b_min`` is ``None`` when
    ``b`` turned out to bound a disk inside the polygon.
    """
    if _shares_point(a, b):
        b = push_off(surface, b, a)
    count = crossing_count(a, b)
    removed = 0
    while count:
        arr = Arrangement(surface, [a, b])
        found = _find_bigon(arr)
        if found is None:
            break
        new_b = _remove_bigon(surface, a, b, arr, *found)
        if new_b is None:
            return None, 0, removed + 1
        check_closed(surface, new_b)
        check_simple(new_b)
        new_count = crossing_count(a, new_b)
        if new_count >= count:
            raise InternalError(f"bigon removal did not reduce crossings ({count} -> {new_count})")
        b, count = new_b, new_count
        removed += 1
    return b, count, removed


def geometric_intersection(surface: PolygonSurface, c1: CurveDiagram, c2: CurveDiagram) -> int:
    for c in (c1, c2):
        check_closed(surface, c)
        check_simple(c)
    return minimal_position(surface, c1, c2)[1]


# --- homology -----------------------------------------------------------------


def dual_loop(surface: PolygonSurface, i: int) -> CurveDiagram:
    """The single chord joining the midpoints of side ``i`` and its partner."""
    j = surface.partner(i)
    lo, hi = min(i, j), max(i, j)
    half = Fraction(1, 2)
    return CurveDiagram((BoundaryPoint(lo, half), BoundaryPoint(hi, half)))


def crossing_vector(surface: PolygonSurface, curve: CurveDiagram) -> np.ndarray:
    """Signed crossings with each side pair, in the order of ``edge_pairs()``.

    Leaving through the larger-indexed side of a pair counts +1.
    """
    index = {}
    for k, (i, j) in enumerate(surface.pairing.edge_pairs()):
        index[i] = (k, -1)
        index[j] = (k, 1)
    w = lattice.zeros(surface.n_sides // 2)
    for ex, _en in curve.crossings():
        k, s = index[ex.side]
        w[k] += s
    return w


class HomologyBasis:
    """A symplectic basis of H_1 built from the dual loops of the side pairs.

    ``form`` is the intersection matrix of the dual loops; its radical is
    the span of the vertex relations, and a skew normal form of it yields
    ``a1, b1, ..., ag, bg`` as integer combinations of dual loops.
    """

    def __init__(self, surface: PolygonSurface):
        self.surface = surface
        pairs = surface.pairing.edge_pairs()
        loops = [_chord_positions(dual_loop(surface, i))[0] for i, _ in pairs]
        m = len(pairs)
        q = lattice.zeros((m, m))
        for r in range(m):
            for c in range(m):
                if r != c and _interleaved(loops[r], loops[c]):
                    q[r, c] = _cross_sign(loops[r], loops[c])
        self.form = q
        self.basis = lattice.symplectic_basis(lattice.identity(m), q) if m else []
        if len(self.basis) != 2 * surface.genus:
            raise InternalError("homology basis has the wrong rank")
        self.genus = surface.genus

    def coords(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=object)
        out = []
        for k in range(self.genus):
            a, b = self.basis[2 * k], self.basis[2 * k + 1]
            out.append(int(w @ self.form @ b))
            out.append(int(a @ self.form @ w))
        return np.array(out, dtype=object)

    def chain(self, coords) -> np.ndarray:
        """A dual-loop chain representing the class with the given coordinates."""
        total = lattice.zeros(len(self.form))
        for c, v in zip(coords, self.basis):
            total = total + int(c) * v
        return total


@lru_cache(maxsize=64)
def homology_basis(surface: PolygonSurface) -> HomologyBasis:
    return HomologyBasis(surface)


def homology_class(surface: PolygonSurface, curve: CurveDiagram) -> np.ndarray:
    return homology_basis(surface).coords(crossing_vector(surface, curve))


def _homologous_up_to_sign(u, v) -> bool:
    return bool(np.array_equal(u, v) or np.array_equal(u, -v))


# --- cutting --------------------------------------------------------------------


def cut_along(surface: PolygonSurface, curves) -> list[tuple[int, int]]:
    """Component profiles ``(genus, boundary circles)`` of the surface cut along
    pairwise disjoint simple closed curves, sorted."""
    return sorted(r.profile for r in _cut_regions(surface, curves).regions.values())


def _cut_regions(surface: PolygonSurface, curves) -> Arrangement:
    curves = list(curves)
    for c in curves:
        check_closed(surface, c)
        check_simple(c)
    fixed = []
    for c in curves:
        if any(_shares_point(c, d) for d in fixed):
            c = push_off(surface, c, *fixed)
        fixed.append(c)
    for i in range(len(fixed)):
        for j in range(i + 1, len(fixed)):
            if crossing_count(fixed[i], fixed[j]):
                raise CrossingInput(f"curves {i} and {j} cross in the diagram")
    arr = Arrangement(surface, fixed)
    if sum(r.chi for r in arr.regions.values()) != surface.euler_char:
        raise InternalError("cut components do not reassemble to the surface")
    return arr


def is_nonseparating(surface: PolygonSurface, curve: CurveDiagram) -> bool:
    homological = bool(np.any(homology_class(surface, curve)))
    by_cut = len(cut_along(surface, [curve])) == 1
    if homological != by_cut:
        raise InternalError("homology and cut disagree on separation")
    return homological


@dataclass(frozen=True)
class PairAnalysis:
    """Everything the disjointness certificates need about a pair ``(a, b)``.

    ``b_min`` is ``b`` isotoped into minimal position with ``a``; the cut
    data are present only when the pair is disjoint.
    """

    raw_crossings: int
    intersection: int
    bigons_removed: int
    b_min: CurveDiagram | None
    class_a: np.ndarray
    class_b: np.ndarray
    profiles: tuple | None = None
    parallel: bool = False
    bounding: bool = False

    @property
    def disjoint(self) -> bool:
        return self.intersection == 0

    @property
    def homologous(self) -> bool:
        return _homologous_up_to_sign(self.class_a, self.class_b)


def analyze_pair(surface: PolygonSurface, a: CurveDiagram, b: CurveDiagram) -> PairAnalysis:
    raw = crossing_count(a, b) if not _shares_point(a, b) else crossing_count(a, push_off(surface, b, a))
    b_min, count, removed = minimal_position(surface, a, b)
    ha, hb = homology_class(surface, a), homology_class(surface, b)
    if count or b_min is None:
        return PairAnalysis(raw, count, removed, b_min, ha, hb)
    arr = _cut_regions(surface, [a, b_min])
    parallel = _parallel_in(arr)
    nonsep = bool(np.any(ha)) and bool(np.any(hb))
    homological = nonsep and _homologous_up_to_sign(ha, hb) and not parallel
    by_cut = nonsep and len(arr.regions) == 2 and not parallel
    if homological != by_cut:
        raise InternalError("homological and cut characterisations of a bounding pair disagree")
    profiles = tuple(sorted(r.profile for r in arr.regions.values()))
    return PairAnalysis(raw, count, removed, b_min, ha, hb, profiles, parallel, homological)


def is_parallel(surface: PolygonSurface, a: CurveDiagram, b: CurveDiagram) -> bool:
    """Whether the disjoint curves ``a`` and ``b`` cobound an annulus."""
    pa = analyze_pair(surface, a, b)
    if not pa.disjoint:
        raise CrossingInput("is_parallel needs curves with zero geometric intersection")
    return pa.parallel


def _parallel_in(arr: Arrangement) -> bool:
    for r in arr.regions.values():
        if r.profile == (0, 2) and {s[0] for s in r.sides} == {0, 1}:
            return True
    return False


def is_bounding_pair(surface: PolygonSurface, a: CurveDiagram, b: CurveDiagram) -> bool:
    """Disjoint, nonseparating, homologous and not isotopic.

    The homological test and the two-component cut test are both evaluated
    and must agree.
    """
    return analyze_pair(surface, a, b).bounding


# --- text format ------------------------------------------------------------------


def parse_curve(text: str) -> CurveDiagram:
    """Read ``curve <m>`` followed by ``2m`` lines ``point <side> <num>/<den>``."""
    m = None
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "curve" and len(tok) == 2 and m is None:
                m = int(tok[1])
                if m < 1:
                    raise ParseError(f"line {lineno}: a curve needs at least one chord")
            elif tok[0] == "point" and len(tok) == 3 and m is not None:
                pts.append(BoundaryPoint(int(tok[1]), Fraction(tok[2])))
            else:
                raise ParseError(f"line {lineno}: cannot parse {raw!r}")
        except (ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    if m is None:
        raise ParseError("missing curve line")
    if len(pts) != 2 * m:
        raise ParseError(f"expected {2 * m} points, found {len(pts)}")
    return CurveDiagram(tuple(pts))
