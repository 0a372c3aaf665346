"""Closed orientable surfaces presented as a single polygon with paired sides.

Sides are numbered ``0 .. n-1`` counterclockwise; side ``i`` runs from corner
``i`` to corner ``i + 1``.  Every side is glued to its partner with the
boundary direction reversed, so a point at parameter ``t`` on side ``i`` is
identified with the point at ``1 - t`` on ``pairs[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidPairing, ParseError


@dataclass(frozen=True)
class EdgePairing:
    """A fixed-point-free involution on the side indices of a polygon."""

    pairs: tuple[int, ...]

    def __post_init__(self):
        pairs = tuple(int(p) for p in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        n = len(pairs)
        if n == 0 or n % 2:
            raise InvalidPairing(f"number of sides must be positive and even, got {n}")
        for i, j in enumerate(pairs):
            if not 0 <= j < n:
                raise InvalidPairing(f"side {i} glued to out-of-range side {j}")
            if j == i:
                raise InvalidPairing(f"side {i} glued to itself")
            if pairs[j] != i:
                raise InvalidPairing(f"pairing is not an involution at side {i}")

    @classmethod
    def from_pairs(cls, n_sides: int, glued) -> "EdgePairing":
        table = [None] * n_sides
        for i, j in glued:
            for a in (i, j):
                if not 0 <= a < n_sides:
                    raise InvalidPairing(f"side {a} out of range for a {n_sides}-gon")
            if i == j:
                raise InvalidPairing(f"side {i} glued to itself")
            if table[i] is not None or table[j] is not None:
                raise InvalidPairing(f"side glued twice in pair ({i}, {j})")
            table[i], table[j] = j, i
        missing = [i for i, v in enumerate(table) if v is None]
        if missing:
            raise InvalidPairing(f"unglued sides: {missing}")
        return cls(tuple(table))

    @property
    def n_sides(self) -> int:
        return len(self.pairs)

    def __call__(self, i: int) -> int:
        return self.pairs[i % len(self.pairs)]

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Unordered side pairs ``(i, j)`` with ``i < j``, sorted by ``i``."""
        return [(i, j) for i, j in enumerate(self.pairs) if i < j]


def vertex_cycles(pairing: EdgePairing) -> list[tuple[int, ...]]:
    """Partition the polygon corners into the classes identified by the gluing.

    Corner ``i`` starts side ``i``; reversing the side direction sends it to
    the end corner ``pairs[i] + 1`` of the partner side.
    """
    n = pairing.n_sides
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in enumerate(pairing.pairs):
        for a, b in ((i, (j + 1) % n), ((i + 1) % n, j)):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    classes: dict[int, list[int]] = {}
    for c in range(n):
        classes.setdefault(find(c), []).append(c)
    return sorted(tuple(v) for v in classes.values())


@dataclass(frozen=True)
class PolygonSurface:
    pairing: EdgePairing

    @property
    def n_sides(self) -> int:
        return self.pairing.n_sides

    def partner(self, side: int) -> int:
        return self.pairing(side)

    @cached_property
    def vertex_cycles(self) -> list[tuple[int, ...]]:
        return vertex_cycles(self.pairing)

    @cached_property
    def corner_class(self) -> dict[int, int]:
        return {c: k for k, cyc in enumerate(self.vertex_cycles) for c in cyc}

    @cached_property
    def euler_char(self) -> int:
        return len(self.vertex_cycles) - self.n_sides // 2 + 1

    @cached_property
    def genus(self) -> int:
        return genus(self)

    def to_text(self) -> str:
        lines = [f"polygon {self.n_sides}"]
        lines += [f"glue {i} {j}" for i, j in self.pairing.edge_pairs()]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"PolygonSurface(n_sides={self.n_sides}, genus={self.genus})"


def genus(surface: PolygonSurface) -> int:
    chi = surface.euler_char
    if chi % 2:
        raise InvalidPairing(f"odd Euler characteristic {chi}: gluing is not orientable")
    return (2 - chi) // 2


def surface_from_pairs(n_sides: int, glued) -> PolygonSurface:
    return PolygonSurface(EdgePairing.from_pairs(n_sides, glued))


def standard_surface(g: int) -> PolygonSurface:
    """The (4g+2)-gon with opposite sides identified."""
    if g < 1:
        raise ValueError(f"genus must be at least 1, got {g}")
    n = 4 * g + 2
    return PolygonSurface(EdgePairing(tuple((i + 2 * g + 1) % n for i in range(n))))


def rotation_shifts(surface: PolygonSurface) -> list[int]:
    """Side shifts ``s`` with ``pairs(i + s) == pairs(i) + s`` for every side."""
    n = surface.n_sides
    p = surface.pairing.pairs
    return [s for s in range(n) if all(p[(i + s) % n] == (p[i] + s) % n for i in range(n))]


def parse_surface(text: str) -> PolygonSurface:
    """Read the ``polygon <n>`` / ``glue <i> <j>`` text format."""
    n_sides = None
    glued = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "polygon" and len(tok) == 2:
                if n_sides is not None:
                    raise ParseError(f"line {lineno}: repeated polygon line")
                n_sides = int(tok[1])
                if n_sides <= 0 or n_sides % 2:
                    raise ParseError(f"line {lineno}: polygon needs a positive even side count")
            elif tok[0] == "glue" and len(tok) == 3:
                if n_sides is None:
                    raise ParseError(f"line {lineno}: glue before polygon")
                i, j = int(tok[1]), int(tok[2])
                if i == j:
                    raise ParseError(f"line {lineno}: side {i} glued to itself")
                for a in (i, j):
                    if not 0 <= a < n_sides:
                        raise ParseError(f"line {lineno}: side {a} out of range")
                    if a in seen:
                        raise ParseError(f"line {lineno}: side {a} glued twice")
                seen.update((i, j))
                glued.append((i, j))
            else:
                raise ParseError(f"line {lineno}: cannot parse {raw!r}")
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    if n_sides is None:
        raise ParseError("missing polygon line")
    try:
        return surface_from_pairs(n_sides, glued)
    except InvalidPairing as exc:
        raise ParseError(str(exc)) from None
