"""Formal words in Dehn twists and mapping-class symbols.

Twist letters are written ``T[label]`` and map letters by their bare name;
``^-1`` marks an inverse.  Words compose left to right as products, so a
word ``f g`` acts as ``f`` after ``g`` on curves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, RuleError

ALPHA1, ALPHA2 = "alpha1", "alpha2"
GAMMA1, GAMMA2 = "gamma1", "gamma2"
X1, X2, X3 = "x1", "x2", "x3"
LANTERN_LABELS = (ALPHA1, ALPHA2, GAMMA1, GAMMA2, X1, X2, X3)
# curves bounding the lantern's four-holed sphere; their twists are central in it
LANTERN_BOUNDARY = (ALPHA1, ALPHA2, X1, GAMMA2)
PHI = "phi"


@dataclass(frozen=True, order=True)
class Generator:
    kind: str  # "T" for a twist, "S" for a map symbol
    label: str
    exponent: int = 1

    def __post_init__(self):
        if self.kind not in ("T", "S"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.exponent not in (1, -1):
            raise ValueError("generator exponent must be +1 or -1")

    def inverse(self) -> "Generator":
        return Generator(self.kind, self.label, -self.exponent)

    def __str__(self):
        base = f"T[{self.label}]" if self.kind == "T" else self.label
        return base if self.exponent == 1 else base + "^-1"


def twist(label: str, exponent: int = 1) -> Generator:
    return Generator("T", label, exponent)


def sym(label: str, exponent: int = 1) -> Generator:
    return Generator("S", label, exponent)


@dataclass(frozen=True)
class McgWord:
    letters: tuple[Generator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(tuple(self.letters)))

    def __mul__(self, other: "McgWord") -> "McgWord":
        return McgWord(self.letters + other.letters)

    def inverse(self) -> "McgWord":
        return McgWord(tuple(g.inverse() for g in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return " ".join(str(g) for g in self.letters) if self.letters else "1"


def word(*letters) -> McgWord:
    out = []
    for x in letters:
        if isinstance(x, McgWord):
            out.extend(x.letters)
        else:
            out.append(x)
    return McgWord(tuple(out))


def _reduce(letters):
    stack = []
    for g in letters:
        if stack and stack[-1] == g.inverse():
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def free_reduce(w: McgWord) -> McgWord:
    # McgWord keeps itself reduced; this is the explicit entry point.
    return McgWord(_reduce(w.letters))


def power_word(label: str, k: int) -> McgWord:
    g = sym(label, 1 if k > 0 else -1)
    return McgWord((g,) * abs(k))


def conjugate_by(w: McgWord, s: str) -> McgWord:
    """``s^-1 w s``."""
    return word(sym(s, -1), w, sym(s))


def parse_word(text: str) -> McgWord:
    out = []
    for tok in text.split():
        inv = tok.endswith("^-1")
        body = tok[:-3] if inv else tok
        if body.startswith("T[") and body.endswith("]") and len(body) > 3:
            g = twist(body[2:-1])
        elif body and body.replace("_", "").isalnum():
            g = sym(body)
        else:
            raise ParseError(f"cannot parse word token {tok!r}")
        out.append(g.inverse() if inv else g)
    return McgWord(tuple(out))


# --- lantern relation --------------------------------------------------------------


def lantern_sides(labels=LANTERN_LABELS, form: str = "solved") -> tuple[McgWord, McgWord]:
    """The two sides of the lantern relation.

    ``labels`` lists the curves in the order alpha1, alpha2, gamma1, gamma2,
    x1, x2, x3.  ``form="solved"`` gives ``T_a1 = T_g1 T_g2^-1 T_x3 T_x1^-1 T_x2 T_a2^-1``;
    ``form="product"`` gives ``T_a1 T_a2 T_x1 T_g2 = T_g1 T_x3 T_x2``.
    """
    labels = tuple(labels)
    if len(labels) != 7 or len(set(labels)) != 7:
        raise RuleError("the lantern needs seven distinct curve labels")
    a1, a2, g1, g2, x1, x2, x3 = labels
    if form == "solved":
        return word(twist(a1)), word(
            twist(g1), twist(g2, -1), twist(x3), twist(x1, -1), twist(x2), twist(a2, -1)
        )
    if form == "product":
        return word(twist(a1), twist(a2), twist(x1), twist(g2)), word(twist(g1), twist(x3), twist(x2))
    raise ValueError(f"unknown lantern form {form!r}")


def commutation_normal_form(w: McgWord, central) -> tuple:
    """Normal form modulo letters in ``central`` commuting with every letter of ``w``.

    Only sound when each central twist commutes with all letters present,
    as holds for the boundary twists of a lantern inside the lantern.
    """
    central = set(central)
    rest = [g for g in w.letters if not (g.kind == "T" and g.label in central)]
    exps: dict[str, int] = {}
    for g in w.letters:
        if g.kind == "T" and g.label in central:
            exps[g.label] = exps.get(g.label, 0) + g.exponent
    return (McgWord(tuple(rest)), tuple(sorted((k, v) for k, v in exps.items() if v)))


def lantern_forms_agree(labels=LANTERN_LABELS) -> bool:
    """Rearrange the product form into the one-twist form using only boundary commutations."""
    a1, a2, g1, g2, x1, x2, x3 = labels
    left, right = lantern_sides(labels, "product")
    derived = right * word(twist(g2, -1), twist(x1, -1), twist(a2, -1))
    _, solved = lantern_sides(labels, "solved")
    if left.letters[0] != twist(a1):
        return False
    boundary = (a1, a2, x1, g2)
    return commutation_normal_form(derived, boundary) == commutation_normal_form(solved, boundary)


# --- factorisation ------------------------------------------------------------------


@dataclass(frozen=True)
class MappingRule:
    """The fact ``map_label(source) = target``."""

    map_label: str
    source: str
    target: str


LANTERN_RULES = (
    MappingRule("f", GAMMA1, GAMMA2),
    MappingRule("g", X3, X1),
    MappingRule("h", X2, ALPHA2),
)

# the lantern twists the factorisation eliminates, in the order they appear
_ELIMINATED = (GAMMA1, X3, X2)


def _rule_table(rules) -> dict[str, MappingRule]:
    rules = list(rules)
    if not rules:
        raise RuleError("no mapping rules given")
    table: dict[str, MappingRule] = {}
    maps = set()
    for r in rules:
        if r.source in table and table[r.source] != r:
            raise RuleError(f"conflicting rules for source {r.source}")
        if r.map_label in maps and r not in table.values():
            raise RuleError(f"map {r.map_label} used by two rules")
        table[r.source] = r
        maps.add(r.map_label)
    missing = [s for s in _ELIMINATED if s not in table]
    if missing:
        raise RuleError(f"missing rules for {missing}")
    extra = sorted(set(table) - set(_ELIMINATED))
    if extra:
        raise RuleError(f"unexpected rule sources {extra}")
    return table


def lemma32_factorize(rules=LANTERN_RULES) -> McgWord:
    """``m^-1 (T_t m T_t^-1)`` for each rule ``m(s) = t``, in lantern order.

    With the standard rules this is
    ``f^-1 T_g2 f T_g2^-1 g^-1 T_x1 g T_x1^-1 h^-1 T_a2 h T_a2^-1``.
    """
    table = _rule_table(rules)
    parts = []
    for src in _ELIMINATED:
        r = table[src]
        parts += [sym(r.map_label, -1), twist(r.target), sym(r.map_label), twist(r.target, -1)]
    return McgWord(tuple(parts))


def naturality_normal_form(w: McgWord, rules, leftmost: bool = True) -> McgWord | None:
    """Eliminate twists about rule sources by ``T_s -> m^-1 T_t m`` for ``m(s) = t``.

    Returns ``None`` when the rewriting does not terminate (a rule cycle).
    ``leftmost`` picks the rewrite strategy; both must agree on a confluent
    rule set.
    """
    # a rule fixing its curve licenses no rewrite; its map symbol is an identity
    identities = {r.map_label for r in rules if r.source == r.target}
    table = {r.source: r for r in rules if r.source != r.target}
    letters = [g for g in w.letters if not (g.kind == "S" and g.label in identities)]
    letters = list(_reduce(tuple(letters)))
    if _has_cycle(table):
        return None
    while True:
        idx = [i for i, g in enumerate(letters) if g.kind == "T" and g.label in table]
        if not idx:
            return McgWord(tuple(letters))
        i = idx[0] if leftmost else idx[-1]
        g = letters[i]
        r = table[g.label]
        letters[i:i + 1] = [sym(r.map_label, -1), twist(r.target, g.exponent), sym(r.map_label)]
        letters = list(_reduce(tuple(letters)))


def _has_cycle(table) -> bool:
    # each source rewrites to one target, so the rule graph is functional
    for start in table:
        seen = {start}
        cur = table[start].target
        while cur in table:
            if cur in seen:
                return True
            seen.add(cur)
            cur = table[cur].target
    return False


def check_derivation(rules=LANTERN_RULES) -> bool:
    """Whether the factorisation word equals the lantern's right side modulo naturality."""
    try:
        factor = lemma32_factorize(rules)
    except RuleError:
        return False
    _, rhs = lantern_sides()
    forms = []
    for leftmost in (True, False):
        for w in (factor, rhs):
            nf = naturality_normal_form(w, rules, leftmost)
            if nf is None:
                return False
            forms.append(nf)
    if forms[0] != forms[2] or forms[1] != forms[3]:
        return False  # strategies disagree: not confluent
    return forms[0] == forms[1]


# --- six conjugates ------------------------------------------------------------------


def theorem14_word(i: int, j: int, k: int, psi=("psi_f", "psi_g", "psi_h")) -> McgWord:
    """Substitute ``f = psi_f^-1 phi^i psi_f`` (and likewise g, h) into the factorisation."""
    if 0 in (i, j, k):
        raise ValueError("powers of phi must be nonzero")
    subst = {}
    for m, p, e in zip(("f", "g", "h"), psi, (i, j, k)):
        subst[m] = word(sym(p, -1), power_word(PHI, e), sym(p))
    out = []
    for g in lemma32_factorize().letters:
        if g.kind == "S":
            out.append(subst[g.label] if g.exponent == 1 else subst[g.label].inverse())
        else:
            out.append(g)
    return word(*out)


@dataclass(frozen=True)
class ConjugateBlock:
    conjugator: McgWord
    power: int

    def __str__(self):
        return f"({self.conjugator}) {PHI}^{self.power} ({self.conjugator.inverse()})"


def conjugate_blocks(w: McgWord, symbol: str = PHI) -> list[ConjugateBlock] | None:
    """Write ``w`` as a product of conjugates ``u phi^p u^-1``, one per maximal run of ``phi``.

    ``w = u0 phi^p1 u1 phi^p2 ... ur`` is such a product exactly when
    ``u0 u1 ... ur`` is trivial; the conjugators are the prefix products.
    Returns ``None`` otherwise.
    """
    blocks = []
    prefix: list[Generator] = []
    letters = w.letters
    i = 0
    while i < len(letters):
        g = letters[i]
        if g.kind == "S" and g.label == symbol:
            p = 0
            while i < len(letters) and letters[i].kind == "S" and letters[i].label == symbol:
                p += letters[i].exponent
                i += 1
            blocks.append(ConjugateBlock(McgWord(tuple(prefix)), p))
        else:
            prefix = list(_reduce(tuple(prefix) + (g,)))
            i += 1
    if prefix:
        return None
    return blocks


def conjugate_count(w: McgWord, symbol: str = PHI) -> int | None:
    blocks = conjugate_blocks(w, symbol)
    return None if blocks is None else len(blocks)


def blocks_distinct(blocks) -> bool:
    keys = {(b.conjugator.letters, b.power) for b in blocks}
    return len(keys) == len(blocks)
