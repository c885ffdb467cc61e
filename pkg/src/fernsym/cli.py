"""Command line entry point: ``fernsym build|count|formula|verify``."""
from __future__ import annotations

import argparse
import json
import sys
from itertools import islice
from typing import Optional, Sequence

from . import formulas as fm
from .counting import (CountError, count_matchings_dual, count_symmetric_dp,
                       count_symmetric_tilings, count_tilings, iter_tilings)
from .lattice import is_centrally_symmetric
from .regions import RegionError
from .render import region_json, region_svg
from .specstr import SpecParseError, parse_spec
from .sweeps import BUDGET_ENV, FAMILIES, SweepConfig, default_budget, run_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``3``, ``0..4`` (inclusive) or ``0,2,4``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo_i, hi_i = int(lo), int(hi)
                if hi_i < lo_i:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo_i, hi_i + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    return sorted(set(out))


def parse_int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _region(spec: str):
    return parse_spec(spec).build()


# ------------------------------------------------------------------- commands

def cmd_build(spec: str, json_out: Optional[str] = None, svg_out: Optional[str] = None,
              tiling: Optional[int] = None) -> int:
    r = _region(spec)
    doc = region_json(r)
    doc["spec"] = spec
    chosen = None
    if tiling is not None:
        chosen = next(islice(iter_tilings(r), tiling, None), None)
        if chosen is None:
            raise UsageError(f"region has fewer than {tiling + 1} tilings")
        doc["tiling"] = {"index": tiling,
                         "lozenges": sorted([[t.p, t.q, t.orient.letter] for t in sorted(loz)]
                                            for loz in chosen)}
    text = json.dumps(doc, sort_keys=True) + "\n"
    if json_out:
        with open(json_out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if svg_out:
        with open(svg_out, "w") as fh:
            fh.write(region_svg(r, chosen))
    return EXIT_OK


_METHODS = {"elim": count_tilings, "dual": count_matchings_dual}
_SYM_METHODS = {"elim": count_symmetric_tilings, "dp": count_symmetric_dp}


def cmd_count(spec: str, symmetric: bool = False, method: str = "elim") -> int:
    r = _region(spec)
    if symmetric:
        if r.center is None or not is_centrally_symmetric(r):
            print(f"error: region {spec} is not centrally symmetric", file=sys.stderr)
            return EXIT_USAGE
        fn = _SYM_METHODS.get(method)
    else:
        fn = _METHODS.get(method)
    if fn is None:
        raise UsageError(f"method {method!r} not available here")
    print(fn(r))
    return EXIT_OK


def cmd_formula(name: str, args) -> int:
    x, y, z = args.x, args.y, args.z
    lobes = parse_int_list(args.lobes)
    gaps = parse_int_list(args.gaps)
    ferns = [parse_int_list(f) for f in args.ferns.split("/")] if args.ferns else []
    if name == "macmahon":
        val = fm.macmahon(x, y, z)
    elif name == "s":
        val = fm.s_value(lobes)
    elif name == "trapezoid":
        val = fm.trapezoid_count(args.m, args.n, parse_int_list(args.pos))
    elif name == "theorem1":
        val = fm.theorem1_rhs(x, y, z, lobes)
    elif name == "theorem2":
        val = fm.theorem2_rhs(x, y, z, lobes)
    elif name == "singlefern":
        val = fm.singlefern_rhs(x, y, z, lobes)
    elif name == "twolobe":
        val = fm.twolobe_rhs(x, y, z, lobes)
    elif name == "conjecture1":
        val = fm.conjecture1_rhs(x, y, z, gaps, ferns)
    elif name == "conjecture2":
        val = fm.conjecture2_rhs(x, y, z, gaps, ferns)
    else:
        raise UsageError(f"unknown formula {name!r}")
    print(val)
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = SweepConfig(
        args.family,
        x=parse_range(args.x) if args.x else None,
        y=parse_range(args.y) if args.y else None,
        z=parse_range(args.z) if args.z else None,
        lobes_sum_max=args.lobes_sum_max, gaps_max=args.gaps_max, max=args.max,
        budget=args.budget if args.budget is not None else default_budget(),
        jobs=args.jobs, figures=args.figures,
    )
    report = run_sweep(cfg)
    text = report.to_csv() if args.format == "csv" else report.to_json(timings=args.timings)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    elif not args.quiet:
        sys.stdout.write(text)
    s = report.summary()
    print(f"{cfg.family}: {s['checked']} checked, {s['passed']} passed, "
          f"{s['failed_asserted']} failed, {s['counterexamples']} counterexamples, "
          f"{s['skipped']} skipped", file=sys.stderr)
    for r in report.failures:
        print(f"FAILED {r.instance_id}: lhs={r.lhs} rhs={r.rhs} {r.note}".rstrip(), file=sys.stderr)
    for r in report.counterexamples:
        print(f"COUNTEREXAMPLE {r.instance_id}: lhs={r.lhs} rhs={r.rhs}", file=sys.stderr)
    return report.exit_code


# --------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fernsym", description=(
        "Exact lozenge tiling counts of fern-cored hexagons and checks of "
        "their product formulas."))
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="describe a region as JSON, optionally render SVG")
    b.add_argument("spec", help="region spec, e.g. fc:x=2,y=6,z=4,a=1,2,6,3")
    b.add_argument("--json", dest="json_out", help="write JSON here instead of stdout")
    b.add_argument("--svg", dest="svg_out", help="write an SVG rendering here")
    b.add_argument("--tiling", type=int, help="include the N-th tiling (0-based)")

    c = sub.add_parser("count", help="count tilings of a region")
    c.add_argument("spec")
    c.add_argument("--symmetric", action="store_true", help="count centrally symmetric tilings")
    c.add_argument("--method", default="elim", help="elim (default), dual, or dp with --symmetric")

    f = sub.add_parser("formula", help="evaluate a product formula")
    f.add_argument("name", choices=["macmahon", "s", "trapezoid", "theorem1", "theorem2",
                                    "singlefern", "twolobe", "conjecture1", "conjecture2"])
    for key in ("x", "y", "z", "m", "n"):
        f.add_argument(f"--{key}", type=int, default=0)
    f.add_argument("--lobes", default="", help="comma list (half fern, lobes or b-list)")
    f.add_argument("--gaps", default="")
    f.add_argument("--ferns", default="", help="ferns separated by '/', e.g. 1,1/0,1")
    f.add_argument("--pos", default="", help="trapezoid positions")

    v = sub.add_parser("verify", help="run a verification sweep")
    v.add_argument("family", choices=FAMILIES)
    v.add_argument("--x")
    v.add_argument("--y")
    v.add_argument("--z")
    v.add_argument("--lobes-sum-max", type=int)
    v.add_argument("--gaps-max", type=int)
    v.add_argument("--max", type=int)
    v.add_argument("--budget", type=int, help=f"max cells per region (default ${BUDGET_ENV} or built-in)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.add_argument("--out")
    v.add_argument("--figures", action="store_true", help="basecase: add the large figure regions")
    v.add_argument("--timings", action="store_true", help="JSON: include per-row millis")
    v.add_argument("--quiet", action="store_true", help="no report on stdout")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "build":
            return cmd_build(args.spec, args.json_out, args.svg_out, args.tiling)
        if args.command == "count":
            return cmd_count(args.spec, args.symmetric, args.method)
        if args.command == "formula":
            return cmd_formula(args.name, args)
        return cmd_verify(args)
    except (SpecParseError, RegionError, CountError, fm.FormulaError, UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
