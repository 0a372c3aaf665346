"""Command-line front end.

Exit codes: 0 when everything verifies, 1 when a verification fails (the
report is still printed) and 2 for malformed or out-of-domain input.
"""

from __future__ import annotations

import argparse
import sys


from .errors import HyperellipticExcluded, MCGError, ParseError
from .polygon import parse_surface, rotation_shifts, standard_surface
from .rotation import RotationMap, apply, hyperelliptic, power, rotation_of_order
from .symplectic import (
    lantern_homology_classes,
    stl_bound_report,
    verify_lantern_homology,
    verify_theorem14_homology,
)
from .svg import render_svg
from .textio import HEADER, PairFile, format_witness, parse_file, strip_header
from .theorem1 import (
    brute_force_search,
    construct_general,
    construct_standard,
    inequality_holds,
    verify_pair,
    verify_witness,
)
from .words import LANTERN_LABELS, check_derivation, conjugate_blocks, lemma32_factorize, theorem14_word

OK, FAILED, MALFORMED = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load_surface(args):
    if getattr(args, "surface", None):
        return parse_surface(strip_header(_read(args.surface)))
    return standard_surface(args.genus)


def _find_witness(surface, rotation, g, d, default_shift: bool):
    """Standard construction when it applies, else a same-half curve, else a search."""
    if default_shift and surface == standard_surface(g) and g >= 3 and d >= 3 and inequality_holds(g, d):
        return construct_standard(g, d)[1]
    try:
        return construct_general(surface, rotation)
    except MCGError:
        pass
    return brute_force_search(surface, rotation, max_chords=3, position_grid=2)


def _rotation(surface, args):
    if args.shift is not None:
        return RotationMap(surface, args.shift)
    return rotation_of_order(surface, args.order)


# --- subcommands -------------------------------------------------------------------


def cmd_surface_standard(args, out):
    out.write(standard_surface(args.genus).to_text())
    return OK


def cmd_surface_info(args, out):
    s = parse_surface(strip_header(_read(args.file)))
    out.write(f"sides {s.n_sides}\n")
    out.write(f"vertex classes {len(s.vertex_cycles)}\n")
    for cyc in s.vertex_cycles:
        out.write("  " + " ".join(map(str, cyc)) + "\n")
    out.write(f"euler characteristic {s.euler_char}\n")
    out.write(f"genus {s.genus}\n")
    out.write("rotation shifts " + " ".join(map(str, rotation_shifts(s))) + "\n")
    return OK


def cmd_thm1_construct(args, out):
    surface = _load_surface(args)
    rotation = _rotation(surface, args)
    g, d = surface.genus, rotation.order
    witness = _find_witness(surface, rotation, g, d, args.shift is None and not args.surface)
    if witness is None:
        out.write("no witness found\n")
        return FAILED
    return _emit_witness(surface, rotation, witness, args, out)


def cmd_thm1_search(args, out):
    surface = _load_surface(args)
    if args.hyperelliptic:
        rotation = hyperelliptic(surface.genus) if not args.surface else RotationMap(surface, surface.n_sides // 2)
    else:
        rotation = _rotation(surface, args)
    witness = brute_force_search(surface, rotation, args.max_chords, args.grid)
    if witness is None:
        out.write(f"no witness with at most {args.max_chords} chords on grid {args.grid}\n")
        return FAILED
    return _emit_witness(surface, rotation, witness, args, out)


def _emit_witness(surface, rotation, witness, args, out):
    report = verify_witness(surface, rotation, witness)
    text = format_witness(surface, rotation, witness)
    if args.out:
        _write(args.out, text)
    else:
        out.write(text)
    for line in report.lines():
        out.write(line + "\n")
    out.write(f"result: {'PASS' if report.passed else 'FAIL'}\n")
    return OK if report.passed else FAILED


def cmd_thm1_verify(args, out):
    parsed = parse_file(_read(args.file))
    if isinstance(parsed, PairFile):
        report = verify_pair(parsed.surface, parsed.a, parsed.b)
    else:
        report = verify_witness(parsed.surface, parsed.rotation, parsed.witness)
    for line in report.lines():
        out.write(line + "\n")
    out.write(f"result: {'PASS' if report.passed else 'FAIL'}\n")
    return OK if report.passed else FAILED


def _powers(text: str) -> tuple[int, int, int]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"powers must be three integers, got {text!r}") from None
    if len(vals) != 3 or 0 in vals:
        raise UsageError(f"powers must be three nonzero integers, got {text!r}")
    return vals


def cmd_lantern_factor(args, out):
    i, j, k = _powers(args.powers)
    ok = check_derivation()
    out.write(f"{HEADER}\n")
    out.write(f"lemma word: {lemma32_factorize()}\n")
    out.write(f"derivation: {'PASS' if ok else 'FAIL'}\n")
    w = theorem14_word(i, j, k)
    out.write(f"word: {w}\n")
    blocks = conjugate_blocks(w)
    out.write(f"conjugate census: {None if blocks is None else len(blocks)}\n")
    for b in blocks or ():
        out.write(f"  {b}\n")
    passed = ok and blocks is not None and len(blocks) == 6
    out.write(f"result: {'PASS' if passed else 'FAIL'}\n")
    return OK if passed else FAILED


def cmd_verify_homology(args, out):
    g = args.genus
    surface = standard_surface(g)
    if args.shift is None and args.order is None:
        raise UsageError("give --order or --shift")
    rotation = _rotation(surface, args)
    witness = _find_witness(surface, rotation, g, rotation.order, args.shift is None)
    if witness is None:
        out.write("no witness found for this rotation\n")
        return FAILED
    report = verify_theorem14_homology(g, rotation, [witness] * 3)
    for line in report.lines():
        out.write(line + "\n")
    if report.passed:
        for line in stl_bound_report(report).lines():
            out.write(line + "\n")
    return OK if report.passed else FAILED


def cmd_verify_lantern(args, out):
    classes = dict(lantern_homology_classes(args.genus))
    for spec in args.corrupt or ():
        label, _, source = spec.partition("=")
        if label not in classes or source not in classes:
            raise UsageError(f"corruption must be LABEL=LABEL over {', '.join(LANTERN_LABELS)}")
        classes[label] = classes[source]
    for label in LANTERN_LABELS:
        out.write(f"[{label}] = {' '.join(str(int(x)) for x in classes[label])}\n")
    ok = verify_lantern_homology(args.genus, classes)
    out.write(f"lantern relation on homology: {'PASS' if ok else 'FAIL'}\n")
    return OK if ok else FAILED


def cmd_render(args, out):
    curves = []
    rotation = None
    if args.witness:
        parsed = parse_file(_read(args.witness))
        surface = parsed.surface
        if isinstance(parsed, PairFile):
            curves = [parsed.a, parsed.b]
        else:
            rotation = parsed.rotation
            c = parsed.witness.curve
            curves = [c, apply(power(rotation, parsed.witness.k), c)]
    else:
        surface = _load_surface(args)
    if args.curve:
        from .curves import parse_curve

        curves += [parse_curve(strip_header(_read(p))) for p in args.curve]
    _write(args.out, render_svg(surface, curves, rotation, args.title or ""))
    out.write(f"wrote {args.out}\n")
    return OK


# --- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcg-lantern", description="Periodic maps, disjoint curves and lantern factorisations.")
    sub = p.add_subparsers(dest="command", required=True)

    surf = sub.add_parser("surface").add_subparsers(dest="action", required=True)
    a = surf.add_parser("standard")
    a.add_argument("--genus", type=int, required=True)
    a.set_defaults(func=cmd_surface_standard)
    a = surf.add_parser("info")
    a.add_argument("file")
    a.set_defaults(func=cmd_surface_info)

    thm = sub.add_parser("thm1").add_subparsers(dest="action", required=True)
    for name, func in (("construct", cmd_thm1_construct), ("search", cmd_thm1_search)):
        a = thm.add_parser(name)
        a.add_argument("--genus", type=int)
        a.add_argument("--surface")
        a.add_argument("--order", type=int)
        a.add_argument("--shift", type=int)
        a.add_argument("--out")
        if name == "search":
            a.add_argument("--hyperelliptic", action="store_true")
            a.add_argument("--max-chords", type=int, default=3)
            a.add_argument("--grid", type=int, default=2)
        a.set_defaults(func=func)
    a = thm.add_parser("verify")
    a.add_argument("file")
    a.set_defaults(func=cmd_thm1_verify)

    lan = sub.add_parser("lantern").add_subparsers(dest="action", required=True)
    a = lan.add_parser("factor")
    a.add_argument("--powers", default="1,1,1")
    a.set_defaults(func=cmd_lantern_factor)

    ver = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    a = ver.add_parser("homology")
    a.add_argument("--genus", type=int, required=True)
    a.add_argument("--order", type=int)
    a.add_argument("--shift", type=int)
    a.set_defaults(func=cmd_verify_homology)
    a = ver.add_parser("lantern")
    a.add_argument("--genus", type=int, default=3)
    a.add_argument("--corrupt", action="append", metavar="LABEL=LABEL")
    a.set_defaults(func=cmd_verify_lantern)

    a = sub.add_parser("render")
    a.add_argument("--out", required=True)
    a.add_argument("--genus", type=int)
    a.add_argument("--surface")
    a.add_argument("--witness")
    a.add_argument("--curve", action="append")
    a.add_argument("--title")
    a.set_defaults(func=cmd_render)
    return p


def _check_source(args):
    if getattr(args, "func", None) in (cmd_thm1_construct, cmd_thm1_search, cmd_render):
        if args.func is cmd_render and args.witness:
            return
        if (args.genus is None) == (args.surface is None):
            raise UsageError("give exactly one of --genus and --surface")
    if getattr(args, "func", None) in (cmd_thm1_construct,) and args.order is None and args.shift is None:
        raise UsageError("give --order or --shift")
    if getattr(args, "func", None) is cmd_thm1_search and not args.hyperelliptic:
        if args.order is None and args.shift is None:
            raise UsageError("give --order, --shift or --hyperelliptic")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return MALFORMED if exc.code else OK
    try:
        _check_source(args)
        return args.func(args, out)
    except (UsageError, ParseError, HyperellipticExcluded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED
    except MCGError as exc:
        if isinstance(exc, (ValueError, KeyError)):
            print(f"error: {exc}", file=sys.stderr)
            return MALFORMED
        print(f"verification failed: {exc}", file=sys.stderr)
        return FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
