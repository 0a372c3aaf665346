"""Versioned text files for witnesses and curve pairs.

A witness file::

    mcg-lantern v1
    witness
    polygon 14
    glue 0 7
    ...
    shift 2
    power 2
    curve 2
    point 0 1/4
    ...

A pair file has ``pair`` in place of ``witness``, no ``shift`` or
``power`` lines, and two ``curve`` blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveDiagram, parse_curve
from .errors import MCGError, ParseError
from .polygon import PolygonSurface, parse_surface
from .rotation import RotationMap
from .theorem1 import TheoremWitness

HEADER = "mcg-lantern v1"


@dataclass(frozen=True)
class WitnessFile:
    surface: PolygonSurface
    rotation: RotationMap
    witness: TheoremWitness


@dataclass(frozen=True)
class PairFile:
    surface: PolygonSurface
    a: CurveDiagram
    b: CurveDiagram


def format_witness(surface: PolygonSurface, rotation: RotationMap, witness: TheoremWitness) -> str:
    return (
        f"{HEADER}\nwitness\n{surface.to_text()}shift {rotation.shift}\n"
        f"power {witness.k}\n{witness.curve.to_text()}"
    )


def format_pair(surface: PolygonSurface, a: CurveDiagram, b: CurveDiagram) -> str:
    return f"{HEADER}\npair\n{surface.to_text()}{a.to_text()}{b.to_text()}"


def _strip(text: str) -> list[str]:
    return [ln.split("#", 1)[0].strip() for ln in text.splitlines() if ln.split("#", 1)[0].strip()]


def strip_header(text: str) -> str:
    lines = text.splitlines()
    body = [ln for ln in lines if ln.strip()]
    if body and body[0].strip().startswith("mcg-lantern"):
        if body[0].strip() != HEADER:
            raise ParseError(f"unsupported header {body[0].strip()!r}")
        idx = lines.index(body[0])
        return "\n".join(lines[idx + 1:]) + "\n"
    return text


def parse_file(text: str) -> WitnessFile | PairFile:
    lines = _strip(text)
    if not lines or lines[0] != HEADER:
        raise ParseError(f"missing header {HEADER!r}")
    if len(lines) < 2 or lines[1] not in ("witness", "pair"):
        raise ParseError("second line must be 'witness' or 'pair'")
    kind = lines[1]
    surf_lines, curves, extra = [], [], {}
    for ln in lines[2:]:
        tok = ln.split()
        if tok[0] in ("polygon", "glue"):
            if curves:
                raise ParseError("surface lines must come before curves")
            surf_lines.append(ln)
        elif tok[0] == "curve":
            curves.append([ln])
        elif tok[0] == "point":
            if not curves:
                raise ParseError("point before any curve line")
            curves[-1].append(ln)
        elif tok[0] in ("shift", "power") and len(tok) == 2 and kind == "witness":
            if tok[0] in extra:
                raise ParseError(f"repeated {tok[0]} line")
            try:
                extra[tok[0]] = int(tok[1])
            except ValueError:
                raise ParseError(f"bad integer in {ln!r}") from None
        else:
            raise ParseError(f"cannot parse {ln!r}")
    surface = parse_surface("\n".join(surf_lines))
    parsed = [parse_curve("\n".join(c)) for c in curves]
    try:
        if kind == "witness":
            if len(parsed) != 1 or set(extra) != {"shift", "power"}:
                raise ParseError("a witness needs one curve, a shift and a power")
            rotation = RotationMap(surface, extra["shift"] % surface.n_sides)
            return WitnessFile(surface, rotation, TheoremWitness(parsed[0], extra["power"]))
        if len(parsed) != 2:
            raise ParseError("a pair needs exactly two curves")
        return PairFile(surface, parsed[0], parsed[1])
    except ParseError:
        raise
    except (MCGError, ValueError) as exc:
        raise ParseError(str(exc)) from None
