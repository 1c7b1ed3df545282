"""Command-line front end.

Exit status: 0 on success or PASS, 1 on FAIL, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import List, Optional

from . import tables, verify
from .algebra import AlgebraError, Polynomial, parse
from .grr import grr_rhs
from .local_models import CACHE, residual
from .oracle import ResourceBound, TooLarge, hurwitz_oracle, naive_count, spec_for
from .partitions import MultiPartition, PartitionError
from .render import to_latex
from .ring import p_push, reduce
from .strata import (
    DEGREES,
    UnknownLabel,
    UnknownMonomialDegree,
    degree,
    hurwitz_number,
    sigma_general,
    sigma_g0,
)

CACHE_FILE = "residuals.json"


class UsageError(Exception):
    pass


def frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_latex(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def n_range(text: str) -> List[int]:
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n or n-range {text!r}")
    if lo > hi or lo < 1:
        raise argparse.ArgumentTypeError(f"empty n-range {text!r}")
    return list(range(lo, hi + 1))


def label_arg(text: str) -> MultiPartition:
    try:
        return MultiPartition.parse(text)
    except (PartitionError, ValueError) as e:
        raise argparse.ArgumentTypeError(f"bad label {text!r}: {e}")


# ---------------------------------------------------------------- cache
def _cache_path() -> Optional[Path]:
    d = os.environ.get("STRATA_CACHE_DIR")
    return Path(d) / CACHE_FILE if d else None


def load_cache():
    path = _cache_path()
    if path is None or not path.exists():
        return
    try:
        CACHE.load_json(json.loads(path.read_text(encoding="utf-8")))
    except (ValueError, KeyError, AlgebraError) as e:
        print(f"warning: ignoring residual cache {path}: {e}", file=sys.stderr)


def save_cache():
    path = _cache_path()
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(CACHE.to_json(), ensure_ascii=False, indent=1, sort_keys=True), encoding="utf-8")
    tmp.replace(path)


# ---------------------------------------------------------------- emitters
def emit_class(p: Polynomial, fmt: str, **extra) -> str:
    if fmt == "json":
        return json.dumps({**extra, "class": p.to_json()}, ensure_ascii=False, sort_keys=False)
    if fmt == "latex":
        return to_latex(p)
    return p.to_text()


def emit_report(report: verify.Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), ensure_ascii=False, indent=1)
    if fmt == "latex":
        rows = [f"{it.name} & {'PASS' if it.status else 'FAIL'} \\\\" for it in report.items]
        return "\n".join(["\\begin{tabular}{ll}", *rows, "\\end{tabular}",
                          f"{'PASS' if report.overall else 'FAIL'} ({len(report.items)} items)"])
    return report.to_text()


# ---------------------------------------------------------------- commands
def cmd_residual(args) -> int:
    if (args.label is None) == (args.pair is None):
        raise UsageError("give exactly one of --label or --pair")
    lab = args.label if args.label is not None else args.pair
    if args.pair is not None and len(lab) < 2:
        raise UsageError("--pair needs at least two critical values separated by ';'")
    if args.label is not None and len(lab) != 1:
        raise UsageError("--label takes a single multisingularity; use --pair for several")
    value = residual(lab)
    print(emit_class(value, args.format, label=str(lab)))
    return 0


def cmd_ring(args) -> int:
    chosen = [x for x in (args.reduce, args.push, args.check) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --reduce, --push, --check")
    if args.check is not None:
        name = {"thm3.3": "thm3.3", "eq3.6": "eq3.6"}.get(args.check)
        if name is None:
            raise UsageError("ring --check accepts thm3.3 or eq3.6")
        report = verify.run([name])
        print(emit_report(report, args.format))
        return 0 if report.overall else 1
    if args.reduce is not None:
        value = reduce(parse(args.reduce)).value
    else:
        value = p_push(parse(args.push), args.n, args.genus if args.n is not None else None,
                       substitute_xi0=args.n is not None)
    print(emit_class(value, args.format))
    return 0


def cmd_grr(args) -> int:
    if args.check is not None:
        if args.check != "eq3.6":
            raise UsageError("grr --check accepts eq3.6")
        report = verify.run(["eq3.6"], prefix=False)
        if args.format == "text":
            for d, c, cls in grr_rhs(6):
                print(f"level {d}: {frac(c)} * ({cls.to_text()})")
        print(emit_report(report, args.format))
        return 0 if report.overall else 1
    levels = grr_rhs(6)
    if args.format == "json":
        print(json.dumps([{"level": d, "coefficient": frac(c), "class": cls.to_json()} for d, c, cls in levels],
                         ensure_ascii=False))
    elif args.format == "latex":
        print("+".join(f"{frac_latex(c)}\\left({to_latex(cls)}\\right)" for _, c, cls in levels))
    else:
        for d, c, cls in levels:
            print(f"level {d}: {frac(c)} * ({cls.to_text()})")
    return 0


def _stratum_record(lab: MultiPartition, n: Optional[int], genus0: bool):
    cls = sigma_g0(lab) if genus0 or n is not None else sigma_general(lab)
    rec = {"label": str(lab), "class": cls}
    if n is not None:
        rec["class"] = cls.substitute({"n": n})
        rec["degree"] = degree(cls, n)
        rec["hurwitz"] = hurwitz_number(lab, n)
    return rec


def cmd_strata(args) -> int:
    rec = _stratum_record(args.label, args.n, args.genus0)
    if args.format == "json":
        out = {"label": rec["label"], "class": rec["class"].to_json()}
        for k in ("degree", "hurwitz"):
            if k in rec:
                out[k] = frac(rec[k])
        print(json.dumps(out, ensure_ascii=False))
    elif args.format == "latex":
        print(to_latex(rec["class"]))
        for k in ("degree", "hurwitz"):
            if k in rec:
                print(f"\\deg={frac_latex(rec[k])}" if k == "degree" else f"h={frac_latex(rec[k])}")
    else:
        print(rec["class"].to_text())
        for k in ("degree", "hurwitz"):
            if k in rec:
                print(f"{k}: {frac(rec[k])}")
    return 0


DEGREE_KEYS = {
    "1": "deg1",
    "δ_{0,0}": "deg_delta_{0,0}",
    "ξ_2": "deg_xi_2",
    "δ_{1,0}": "deg_delta_{1,0}",
    "δ_{0,0}^2": "deg_delta_{0,0}^2",
}


def cmd_degrees(args) -> int:
    if not args.all and args.label is None:
        raise UsageError("give --all or --label")
    out = {}
    if args.all:
        for name in DEGREES.names():
            out[DEGREE_KEYS[name]] = DEGREES.value(name, args.n)
        for lab in tables.LABELS:
            out[f"deg_sigma_{{{lab}}}"] = degree(sigma_g0(lab), args.n)
    if args.label is not None:
        out[f"deg_sigma_{{{args.label}}}"] = degree(sigma_g0(args.label), args.n)
    if args.format == "json":
        print(json.dumps({k: frac(v) for k, v in out.items()}, ensure_ascii=False))
    elif args.format == "latex":
        for k, v in out.items():
            print(f"{k} & {frac_latex(v)} \\\\")
    else:
        for k, v in out.items():
            print(f"{k}: {frac(v)}")
    return 0


def cmd_hurwitz(args) -> int:
    ns = args.n
    records = []
    for n in ns:
        cls = sigma_g0(args.label)
        records.append({"label": str(args.label), "n": n, "class": cls.substitute({"n": n}),
                        "degree": degree(cls, n), "hurwitz": hurwitz_number(args.label, n)})
    if args.format == "json":
        objs = [{"label": r["label"], "n": r["n"], "class": r["class"].to_json(), "degree": frac(r["degree"]),
                 "hurwitz": frac(r["hurwitz"])} for r in records]
        print(json.dumps(objs[0] if len(objs) == 1 else objs, ensure_ascii=False))
    elif args.format == "latex":
        for r in records:
            print(f"h_{{{args.label.latex()}}}({r['n']})={frac_latex(r['hurwitz'])}")
    elif len(records) == 1:
        print(frac(records[0]["hurwitz"]))
    else:
        for r in records:
            print(f"{r['n']}: {frac(r['hurwitz'])}")
    return 0


def cmd_oracle(args) -> int:
    out = {n: hurwitz_oracle(args.label, n, args.genus, args.override_resource_bound) for n in args.n}
    if args.naive:
        for n, v in out.items():
            spec = spec_for(args.label, n, args.genus)
            naive = Fraction(naive_count(spec), 1)
            if naive / factorial(n) != v:
                print(f"naive path disagrees at n={n}: {frac(naive / factorial(n))}", file=sys.stderr)
                return 1
    if args.format == "json":
        print(json.dumps({str(n): frac(v) for n, v in out.items()}))
    elif len(out) == 1:
        print(frac(next(iter(out.values()))) if args.format == "text" else frac_latex(next(iter(out.values()))))
    else:
        for n, v in out.items():
            print(f"{n}: {frac(v) if args.format == 'text' else frac_latex(v)}")
    return 0


def cmd_verify(args) -> int:
    if args.against_oracle:
        report = verify.Report()
        items = verify.check_oracle(max_n=args.max_n)
        report.extend(items)
    elif args.all:
        report = verify.run_all()
    elif args.check:
        try:
            report = verify.run(args.check)
        except KeyError as e:
            raise UsageError(f"unknown check {e.args[0]!r}; known: {', '.join(verify.CHECKS)}")
    else:
        raise UsageError("give --all, --check NAME or --against-oracle")
    print(emit_report(report, args.format))
    return 0 if report.overall else 1


# ---------------------------------------------------------------- parser
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="artifact", description="Singularity classes on Hurwitz spaces.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("residual", parents=[fmt], help="residual polynomial of a (multi)singularity")
    p.add_argument("--label", type=label_arg)
    p.add_argument("--pair", type=label_arg, help="several critical values, e.g. '2^1;1^2'")
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("ring", parents=[fmt], help="normal forms and p_* on the universal curve")
    p.add_argument("--reduce")
    p.add_argument("--push")
    p.add_argument("--check")
    p.add_argument("--n", type=int)
    p.add_argument("--genus", type=int, default=0)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("grr", parents=[fmt], help="levels of ch(ω)·td^{-1}")
    p.add_argument("--check")
    p.set_defaults(func=cmd_grr)

    p = sub.add_parser("strata", parents=[fmt], help="class of a stratum")
    p.add_argument("--label", type=label_arg, required=True)
    p.add_argument("--genus0", action="store_true")
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("degrees", parents=[fmt], help="genus-zero degrees")
    p.add_argument("--all", action="store_true")
    p.add_argument("--label", type=label_arg)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("hurwitz", parents=[fmt], help="genus-zero Hurwitz numbers from stratum degrees")
    p.add_argument("--label", type=label_arg, required=True)
    p.add_argument("--n", type=n_range, required=True)
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("oracle", parents=[fmt], help="Hurwitz numbers by counting in S_n")
    p.add_argument("--label", type=label_arg, required=True)
    p.add_argument("--n", type=n_range, required=True)
    p.add_argument("--genus", type=int, default=0)
    p.add_argument("--override-resource-bound", action="store_true")
    p.add_argument("--naive", action="store_true", help="also run the element-level count (n <= 5)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[fmt], help="reproduction checks")
    p.add_argument("--all", action="store_true")
    p.add_argument("--check", action="append", help=f"one of: {', '.join(verify.CHECKS)}")
    p.add_argument("--against-oracle", action="store_true")
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    load_cache()
    try:
        code = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (UnknownLabel, TooLarge, ResourceBound, PartitionError, UnknownMonomialDegree, AlgebraError,
            ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    save_cache()
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
