"""Command-line entry point: ``autcone {compute,section,project,census}``.

Exit codes: 0 success, 1 a computed check failed (or no general section was
found), 2 usage error.  Set ``AUTCONE_VERBOSE=1`` (or 2) for progress logs
on stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from autcone import census
from autcone.pipeline import (
    DescriptorError,
    VarietyDescriptor,
    checks_failed,
    compute_with_retries,
    render_text,
)


def _descriptor(args, kind_override=None) -> VarietyDescriptor:
    if getattr(args, "descriptor", None):
        return VarietyDescriptor.parse(args.descriptor)
    if not args.kind:
        raise DescriptorError("give a variety kind or --descriptor")
    obj = {"kind": kind_override or args.kind, "params": args.params}
    return VarietyDescriptor.from_obj(obj)


def _emit(obj: dict, as_json: bool, text: str | None = None):
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(text if text is not None else json.dumps(obj, sort_keys=True, indent=2))


def _degrees(args) -> tuple[int, ...]:
    return tuple(sorted({2, *(args.degree or [])}))


def _run_pipeline(desc: VarietyDescriptor, args, expect=None) -> int:
    report = compute_with_retries(
        desc,
        _degrees(args),
        max_retries=args.max_retries,
        expect=expect,
        tangency_points=args.tangency_points,
    )
    _emit(report, args.json, render_text(report))
    bad = checks_failed(report)
    if bad:
        print("check failures: " + "; ".join(bad), file=sys.stderr)
        return 1
    return 0


def cmd_compute(args) -> int:
    return _run_pipeline(_descriptor(args), args)


def cmd_section(args) -> int:
    inner = _descriptor(args)
    desc = VarietyDescriptor("section", (), args.seed, inner, args.codim)
    expect = None
    if args.expect:
        try:
            expect = tuple(int(x) for x in args.expect.split(","))
        except ValueError:
            raise DescriptorError("--expect takes DIM_AUT,DIM_PROLONG1") from None
        if len(expect) != 2:
            raise DescriptorError("--expect takes DIM_AUT,DIM_PROLONG1")
    return _run_pipeline(desc, args, expect)


def cmd_project(args) -> int:
    inner = _descriptor(args)
    if args.center_vector:
        try:
            center = [[x.strip() for x in v.split(",")] for v in args.center_vector]
        except ValueError:
            raise DescriptorError("bad --center-vector") from None
    elif args.center:
        center = args.center
    else:
        raise DescriptorError("project needs --center or --center-vector")
    desc = VarietyDescriptor.from_obj({"kind": "projection", "of": inner.to_obj(), "center": center})
    return _run_pipeline(desc, args)


def cmd_census(args) -> int:
    kw = {}
    if args.max is not None:
        kw = {"max_ab": args.max, "max_r": args.max, "proj_max_ab": args.max, "proj_max_r": args.max, "max_km": args.max}
    report = census.run_census(types=tuple(args.type) if args.type else None, **kw)
    if args.json:
        _emit(report, True)
    else:
        width = max(len(k) for k in list(report["sections"]) + ["type III equality"])
        for name, sec in report["sections"].items():
            status = "ok" if not sec["violations"] else f"{len(sec['violations'])} violation(s)"
            print(f"{name.ljust(width)}  {status}")
            for v in sec["violations"]:
                print(f"{''.ljust(width)}    {v}")
        lemma = report["sections"]["lemma_ihss"]["types"]
        if "I" in lemma:
            print(f"{'type I exceptions'.ljust(width)}  {lemma['I']['exceptions']}")
        if "III" in lemma:
            print(f"{'type III equality'.ljust(width)}  r in {lemma['III']['equalities']}")
        print(f"{'total violations'.ljust(width)}  {report['violations']}")
    return 0 if report["violations"] == 0 else 1


def _add_common(p: argparse.ArgumentParser, kind_required=False):
    p.add_argument("kind", nargs=None if kind_required else "?", help="segre, veronese, pluecker, quadric, sympl, spinor10")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--descriptor", help="variety descriptor as JSON (overrides KIND PARAMS)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--degree", type=int, action="append", help="also use the degree-D ideal piece (repeatable)")
    p.add_argument("--max-retries", type=int, default=5)
    p.add_argument("--tangency-points", type=int, default=20)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="autcone", description=__doc__.splitlines()[0])
    parser.add_argument("--fixtures", action="store_true", help="dump the quoted reference values and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("compute", help="aut, prolongations and vertex space of a variety")
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("section", help="seeded general linear section, then compute")
    _add_common(p)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--codim", type=int, default=1)
    p.add_argument("--expect", help="DIM_AUT,DIM_PROLONG1 a general section must reproduce")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("project", help="linear projection from a center, then compute")
    _add_common(p)
    p.add_argument("--center", help="preset such as rank3 (segre) or rank6 (pluecker 2 r)")
    p.add_argument("--center-vector", action="append", help="comma-separated rationals (repeatable)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("census", help="closed-form checks over parameter ranges")
    p.add_argument("--type", action="append", choices=["I", "II", "III", "IV", "V", "VI", "sympl"])
    p.add_argument("--max", type=int, help="upper end of every parameter range")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    level = {"1": logging.INFO, "2": logging.DEBUG}.get(os.environ.get("AUTCONE_VERBOSE", ""), logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.fixtures:
        print(json.dumps(list(census.REFERENCE_VALUES), indent=2, sort_keys=True))
        return 0
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return 2
    if getattr(args, "max", None) is not None and args.max < 2:
        parser.error("--max must be at least 2")
    try:
        return args.func(args)
    except DescriptorError as exc:
        print(f"autcone: error: {exc}", file=sys.stderr)
        return 2
