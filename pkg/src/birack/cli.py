"""Command-line surface: check, poly, verify, enumerate, info.

Exit codes: 0 success, 1 input error, 2 verification or axiom failure,
3 budget refusal.  Worker count comes from ``--workers`` or the
``BIRACK_WORKERS`` environment variable; results are identical for any
worker count because partial censuses merge by addition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .birack import FiniteBirack, sub_biracks
from .braid import MACROS, BraidWord, macro
from .catalog import (BUILTIN_NAMES, ENUMERATION_MODES, builtin, dumps,
                      enumerate_biracks, load)
from .errors import BudgetError, InputError, StructureError
from .invariant import (DEFAULT_BUDGET, LabellingCensus, birack_polynomial,
                        count_labellings, labelling_census, oracle_count)
from .theory import THEORIES, check_birack_for_theory, theory
from .verify import run_verification

WORKERS_ENV = "BIRACK_WORKERS"


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors follow the exit-code contract."""

    def error(self, message):
        raise InputError(message)


def _census_worker(payload):
    word, birack, refined, budget, lead_range = payload
    return labelling_census(word, birack, refined=refined, budget=budget,
                            lead_range=lead_range)


def make_census_fn(workers: int, budget: int):
    """A census callable fanning the enumeration out over ``workers``
    processes by leading-strand label range; None for the in-process path."""
    if workers <= 1:
        return None

    def census(word: BraidWord, birack: FiniteBirack, refined: bool) -> LabellingCensus:
        n = birack.size
        splits = min(workers, n)
        bounds = []
        base, extra = divmod(n, splits)
        lo = 1
        for i in range(splits):
            hi = lo + base + (1 if i < extra else 0)
            bounds.append((lo, hi))
            lo = hi
        with ProcessPoolExecutor(max_workers=splits) as pool:
            parts = list(pool.map(
                _census_worker,
                [(word, birack, refined, budget, b) for b in bounds]))
        merged = LabellingCensus(0, {} if refined else None)
        for part in parts:
            merged = merged.merge(part)
        return merged

    return census


def _add_birack_source(parser: argparse.ArgumentParser):
    parser.add_argument("--builtin", metavar="NAME",
                        help=f"bundled structure ({', '.join(BUILTIN_NAMES)})")
    parser.add_argument("--file", metavar="PATH",
                        help="birack text file holding exactly one structure")


def _add_braid_source(parser: argparse.ArgumentParser):
    parser.add_argument("--braid", metavar="WORD", help="braid word text")
    parser.add_argument("--braid-macro", metavar="NAME",
                        help=f"built-in braid ({', '.join(sorted(MACROS))})")
    parser.add_argument("--strands", type=int, metavar="R",
                        help="strand count (with --braid; default 1 + max index)")


def _add_runtime(parser: argparse.ArgumentParser):
    parser.add_argument("--workers", type=int, default=None,
                        help=f"worker processes (default ${WORKERS_ENV} or 1)")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum label-vector evaluations per count")


def _resolve_workers(args) -> int:
    if getattr(args, "workers", None) is not None:
        if args.workers < 1:
            raise InputError("--workers must be >= 1")
        return args.workers
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InputError(f"${WORKERS_ENV} must be an integer, got {env!r}")
        if value < 1:
            raise InputError(f"${WORKERS_ENV} must be >= 1")
        return value
    return 1


def _load_birack(args) -> FiniteBirack:
    if args.builtin and args.file:
        raise InputError("give either --builtin or --file, not both")
    if args.builtin:
        return builtin(args.builtin)
    if args.file:
        structures = load(args.file)
        if len(structures) != 1:
            raise InputError(
                f"{args.file} holds {len(structures)} structures; expected exactly one")
        return structures[0]
    raise InputError("a birack source is required (--builtin or --file)")


def _load_braid(args) -> BraidWord:
    if args.braid is not None and args.braid_macro:
        raise InputError("give either --braid or --braid-macro, not both")
    if args.braid is not None:
        return BraidWord.parse(args.braid, strands=args.strands)
    if args.braid_macro:
        if args.strands is not None:
            raise InputError("--strands cannot override a macro's strand count")
        return macro(args.braid_macro)
    raise InputError("a braid source is required (--braid or --braid-macro)")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif text:
        print(text)


# -- commands -------------------------------------------------------------


def cmd_check(args) -> int:
    structure = _load_birack(args)
    if args.biquandle:
        lines = []
        ok = True
        checks = []
        for tag, sw in sorted(structure.components.items()):
            witness = sw.biquandle_witness
            passed = witness is None
            ok &= passed
            status = "pass" if passed else "FAIL"
            suffix = f"  [{witness}]" if witness else ""
            lines.append(f"{status}  biquandle({tag}){suffix}")
            checks.append({"name": f"biquandle({tag})", "passed": passed,
                           "witness": witness})
        _emit(args, {"command": "check", "mode": "biquandle", "ok": ok,
                     "checks": checks}, "\n".join(lines))
        return 0 if ok else 2
    descriptor = theory(args.theory)
    report = check_birack_for_theory(structure, descriptor, essential=args.essential)
    payload = {
        "command": "check",
        "theory": descriptor.name,
        "essential": args.essential,
        "ok": report.ok,
        "checks": [{"name": c.name, "passed": c.passed, "witness": c.witness}
                   for c in report],
    }
    _emit(args, payload, str(report))
    return 0 if report.ok else 2


def cmd_poly(args) -> int:
    structure = _load_birack(args)
    word = _load_braid(args)
    workers = _resolve_workers(args)
    census_fn = make_census_fn(workers, args.budget)
    poly = birack_polynomial(word, structure, refined=args.refined,
                             budget=args.budget, census_fn=census_fn)
    oracle_checked = False
    if args.oracle:
        k = poly.period
        for j in range(k):
            stabilized = word.stabilized(j)
            expected = count_labellings(stabilized, structure, budget=args.budget)
            recount = oracle_count(stabilized, structure, budget=args.budget)
            if expected != recount:
                print(f"oracle mismatch on {stabilized.serialize() or '(empty word)'}: "
                      f"enumeration {expected}, oracle {recount}", file=sys.stderr)
                return 2
        oracle_checked = True
    payload = {
        "command": "poly",
        "polynomial": str(poly),
        "period": poly.period,
        "writhe": word.writhe(),
        "strands": word.strands,
        "coefficients": list(poly.coefficients),
        "refined": [sorted(map(list, parts)) for parts in poly.refined] if poly.refined else None,
        "oracle_checked": oracle_checked,
    }
    _emit(args, payload, str(poly))
    return 0


def cmd_verify(args) -> int:
    workers = _resolve_workers(args)
    census_fn = make_census_fn(workers, args.budget)
    results = run_verification(budget=args.budget, census_fn=census_fn)
    ok = all(r.ok for r in results)
    lines = []
    for r in results:
        if r.ok:
            lines.append(f"pass  {r.label}  {r.got}")
        else:
            lines.append(f"FAIL  {r.label}  expected {r.expected!r}, got {r.got!r}")
    lines.append(f"{sum(r.ok for r in results)}/{len(results)} cells pass")
    payload = {
        "command": "verify",
        "ok": ok,
        "cells": [{"label": r.label, "expected": r.expected, "got": r.got, "ok": r.ok}
                  for r in results],
    }
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else 2


def cmd_enumerate(args) -> int:
    structures = enumerate_biracks(args.size, args.mode,
                                   up_to_relabelling=not args.all_labellings)
    text = dumps(structures) if structures else ""
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        summary = f"{len(structures)} structures written to {args.output}"
    else:
        summary = (text + ("\n" if text and not text.endswith("\n") else "")
                   + f"{len(structures)} structures")
    payload = {
        "command": "enumerate",
        "size": args.size,
        "mode": args.mode,
        "count": len(structures),
        "structures": text,
    }
    _emit(args, payload, summary)
    return 0


def cmd_info(args) -> int:
    structure = _load_birack(args)
    lines = [f"name: {structure.name or '(unnamed)'}", f"size: {structure.size}"]
    tag_info = {}
    for tag, sw in sorted(structure.components.items()):
        biq = sw.is_biquandle
        fully = sw.fully_formed
        period = sw.stabilization_period if fully else None
        tag_info[tag] = {"biquandle": biq, "fully_formed": fully, "period": period}
        lines.append(f"component {tag}: fully formed {'yes' if fully else 'no'}, "
                     f"biquandle {'yes' if biq else 'no'}"
                     + (f", period k = {period}" if period else ""))
    lattice = sub_biracks(structure)
    lines.append(f"sub-biracks ({len(lattice)}):")
    for subset in lattice:
        lines.append("  {" + ", ".join(str(x) for x in sorted(subset)) + "}")
    payload = {
        "command": "info",
        "name": structure.name,
        "size": structure.size,
        "components": tag_info,
        "sub_biracks": [sorted(s) for s in lattice],
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="birack",
                     description="Finite biracks and the birack polynomial of braid closures.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p_check = sub.add_parser("check", help="verify birack axioms for a knot theory")
    _add_birack_source(p_check)
    p_check.add_argument("--theory", default="classical",
                         help=f"theory name ({', '.join(sorted(THEORIES))})")
    p_check.add_argument("--essential", action="store_true",
                         help="also require forbidden triple moves to fail")
    p_check.add_argument("--biquandle", action="store_true",
                         help="report the diagonal condition per crossing type instead")
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_poly = sub.add_parser("poly", help="compute the (refined) polynomial of a closure")
    _add_birack_source(p_poly)
    _add_braid_source(p_poly)
    p_poly.add_argument("--refined", action="store_true",
                        help="grade coefficients by smallest sub-birack size")
    p_poly.add_argument("--oracle", action="store_true",
                        help="cross-check counts against the constraint-solving oracle")
    _add_runtime(p_poly)
    p_poly.add_argument("--json", action="store_true")
    p_poly.set_defaults(func=cmd_poly)

    p_verify = sub.add_parser("verify", help="reproduce all bundled reference outputs")
    _add_runtime(p_verify)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="enumerate small structures")
    p_enum.add_argument("-n", "--size", type=int, required=True)
    p_enum.add_argument("--mode", choices=ENUMERATION_MODES, default="rack")
    p_enum.add_argument("--all-labellings", action="store_true",
                        help="keep every labelled structure instead of one per relabelling class")
    p_enum.add_argument("output", nargs="?", help="output path (default stdout)")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_info = sub.add_parser("info", help="structure facts: biquandle status, period, sub-biracks")
    _add_birack_source(p_info)
    p_info.add_argument("--json", action="store_true")
    p_info.set_defaults(func=cmd_info)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
