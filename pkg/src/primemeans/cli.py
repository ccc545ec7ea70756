"""Command-line front end.

Subcommands
-----------
constants   exact integer/rational constants and the tabulated polynomials
expand      the ratio expansion as a closed form plus exact coefficients
tabulate    per-index table of p_n, A_n, G_n, D(n), R(n), A_n/G_n
verify      run the bounds catalog (or a selection) over an index range
crossover   smallest index from which a bound holds through the limit
monotone    certified scan for non-decreasing adjacent ratio pairs
resume      continue a checkpointed verification run

Exit codes: 0 clean, 1 certified violations found, 2 usage/configuration
errors (unknown bound ids are rejected before any sieving starts).
All floating-point output uses a fixed 15-significant-digit rendering with
an explicit error radius, so text, CSV, and JSON agree on every number.
Timing goes to stderr only; stdout is deterministic for a given job.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence

from . import series
from .bounds import (
    CatalogError,
    UnknownBoundError,
    catalog,
    lookup,
    render_catalog_table,
)
from .kernel import quantities, stream_states
from .quantity import DomainError, render_quantity
from .sieve import SieveError
from .verifier import (
    CAPACITY_ENV,
    DEFAULT_LIMIT,
    CapacityError,
    CheckpointError,
    VerificationJob,
    VerifierError,
    capacity,
    crossover as find_crossover,
    monotone_check,
    resume as resume_run,
    run as run_job,
)

__all__ = ["main", "build_parser"]

_FORMATS = ("text", "csv", "json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primemeans",
        description=("compute and verify arithmetic/geometric means of the "
                     "first n primes with certified error tracking"),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_const = sub.add_parser(
        "constants", help="print exact constants and tabulated polynomials")
    p_const.add_argument("-m", "--order", type=int, default=5,
                         help="how many k/r terms to print (default 5)")

    p_expand = sub.add_parser(
        "expand", help="print the A_n/G_n expansion in powers of 1/log p_n")
    p_expand.add_argument("-m", "--order", type=int, default=5,
                          help="expansion order (default 5)")

    p_tab = sub.add_parser(
        "tabulate", help="tabulate means and related quantities by index")
    p_tab.add_argument("--n", dest="n_list", default=None,
                       help="comma-separated indices, e.g. 1,5,10")
    p_tab.add_argument("--from", dest="start", type=int, default=None,
                       help="first index of a contiguous range")
    p_tab.add_argument("--to", dest="limit", type=int, default=None,
                       help="last index of a contiguous range")
    _output_flags(p_tab)

    p_verify = sub.add_parser(
        "verify", help="check catalog inequalities over an index range")
    p_verify.add_argument("--bound", action="append", default=None,
                          metavar="ID", help="bound id (repeatable); "
                          "default: every pointwise catalog entry")
    p_verify.add_argument("--from", dest="start", type=int, default=1,
                          help="first index to classify (default 1)")
    p_verify.add_argument("--to", dest="limit", type=int,
                          default=DEFAULT_LIMIT,
                          help=f"last index (default {DEFAULT_LIMIT}; "
                          f"raise capacity via {CAPACITY_ENV})")
    p_verify.add_argument("--precision", type=int, default=53,
                          help="working precision in bits (53 only)")
    p_verify.add_argument("--checkpoint", default=None, metavar="PATH",
                          help="checkpoint file path")
    p_verify.add_argument("--checkpoint-interval", type=int, default=0,
                          metavar="N", help="write a checkpoint roughly "
                          "every N indices (needs --checkpoint)")
    p_verify.add_argument("--list-bounds", action="store_true",
                          help="print the catalog and exit")
    _output_flags(p_verify)

    p_cross = sub.add_parser(
        "crossover", help="first index from which a bound holds to the limit")
    p_cross.add_argument("--bound", action="append", required=True,
                         metavar="ID", help="bound id (repeatable)")
    p_cross.add_argument("--from", dest="start", type=int, default=1)
    p_cross.add_argument("--to", dest="limit", type=int,
                         default=DEFAULT_LIMIT)

    p_mono = sub.add_parser(
        "monotone", help="scan for non-decreasing adjacent A_n/G_n pairs")
    p_mono.add_argument("--from", dest="start", type=int, default=1)
    p_mono.add_argument("--to", dest="limit", type=int, default=DEFAULT_LIMIT)
    _output_flags(p_mono)

    p_resume = sub.add_parser(
        "resume", help="continue a checkpointed verification run")
    p_resume.add_argument("--checkpoint", required=True, metavar="PATH")
    p_resume.add_argument("--checkpoint-interval", type=int, default=0,
                          metavar="N")
    _output_flags(p_resume)

    return parser


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=_FORMATS, default="text",
                   help="output format (default text)")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="write output to a file instead of stdout")


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_constants(args) -> int:
    m = args.order
    if m < 1:
        raise ValueError("--order must be >= 1")
    lines = [
        "k: " + ", ".join(str(k) for k in series.k_sequence(m)),
        "r: " + ", ".join(str(r) for r in series.r_sequence(m)),
    ]
    for kind in ("Q", "R", "T"):
        for k in range(1, min(m, 3) + 1):
            lines.append(f"{kind}_{k}: {series.cipolla(kind, k).render()}")
    _emit("\n".join(lines) + "\n", None)
    return 0


def _cmd_expand(args) -> int:
    m = args.order
    if m < 0:
        raise ValueError("--order must be >= 0")
    exp = series.ratio_expansion(m)
    lines = [
        f"A_n/G_n ~ {series.render_e_scaled(exp)}   (L = log p_n)",
        "e-scaled coefficients (exact): "
        + ", ".join(str(c) for c in exp.coeffs),
    ]
    _emit("\n".join(lines) + "\n", None)
    return 0


def _parse_tabulate_targets(args) -> List[int]:
    if args.n_list is not None:
        if args.start is not None or args.limit is not None:
            raise ValueError("--n and --from/--to are mutually exclusive")
        try:
            targets = sorted({int(tok) for tok in args.n_list.split(",")})
        except ValueError:
            raise ValueError(f"--n must be comma-separated integers, "
                             f"got {args.n_list!r}")
    else:
        if args.limit is None:
            raise ValueError("tabulate needs --n or --from/--to")
        start = 1 if args.start is None else args.start
        if start < 1 or args.limit < start:
            raise ValueError("need 1 <= from <= to")
        targets = list(range(start, args.limit + 1))
    if not targets or targets[0] < 1:
        raise ValueError("indices must be >= 1")
    cap = capacity()
    if targets[-1] > cap:
        raise CapacityError(
            f"index {targets[-1]} exceeds capacity {cap}; "
            f"raise {CAPACITY_ENV}")
    return targets


_TAB_COLUMNS = ("n", "p_n", "A_n", "G_n", "D", "R", "ratio")


def _cmd_tabulate(args) -> int:
    targets = _parse_tabulate_targets(args)
    want = set(targets)
    rows = []
    for state in stream_states(targets[-1]):
        if state.n in want:
            q = quantities(state)
            rows.append({
                "n": state.n,
                "p_n": state.p,
                "A_n": (q.A.value, q.A.error),
                "G_n": (q.G.value, q.G.error),
                "D": (q.D.value, q.D.error),
                "R": (q.R.value, q.R.error),
                "ratio": (q.ratio.value, q.ratio.error),
            })

    if args.format == "json":
        import json
        doc = {"format": "primemeans-table/1", "rows": []}
        for r in rows:
            doc["rows"].append({
                "n": r["n"], "p_n": r["p_n"],
                **{key: {"value": r[key][0], "error": r[key][1],
                         "value_hex": float(r[key][0]).hex()}
                   for key in ("A_n", "G_n", "D", "R", "ratio")},
            })
        text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    elif args.format == "csv":
        lines = [",".join(_TAB_COLUMNS)]
        for r in rows:
            cells = [str(r["n"]), str(r["p_n"])]
            cells += [render_quantity(*r[key])
                      for key in ("A_n", "G_n", "D", "R", "ratio")]
            lines.append(",".join(cells))
        text = "\n".join(lines) + "\n"
    else:
        widths = [10, 12] + [35] * 5
        header = "".join(c.ljust(w) for c, w in zip(_TAB_COLUMNS, widths))
        lines = [header.rstrip()]
        for r in rows:
            cells = [str(r["n"]), str(r["p_n"])]
            cells += [render_quantity(*r[key])
                      for key in ("A_n", "G_n", "D", "R", "ratio")]
            lines.append("".join(c.ljust(w)
                                 for c, w in zip(cells, widths)).rstrip())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_verify(args) -> int:
    if args.list_bounds:
        _emit(render_catalog_table(), args.out)
        return 0
    if args.bound:
        bounds = tuple(args.bound)
        for bid in bounds:
            lookup(bid)  # raise UnknownBoundError before sieving
    else:
        bounds = tuple(s.id for s in catalog() if s.kind == "pointwise")
    job = VerificationJob(
        bounds=bounds,
        start=args.start,
        limit=args.limit,
        precision=args.precision,
        checkpoint_interval=args.checkpoint_interval,
        checkpoint_path=args.checkpoint,
    )
    report = run_job(job)
    _emit(report.render(args.format), args.out)
    print(f"scanned n in [1, {args.limit}] in {report.wall_seconds:.2f} s "
          f"({report.ns_per_index:.0f} ns/index)", file=sys.stderr)
    return 1 if report.total_violations() > 0 else 0


def _cmd_crossover(args) -> int:
    for bid in args.bound:
        spec = lookup(bid)
        if spec.kind != "pointwise":
            raise CatalogError(f"{bid} is a sequence property; use monotone")
    missing = False
    lines = []
    for bid in args.bound:
        x = find_crossover(bid, args.limit, start=args.start)
        if x is None:
            missing = True
            rendered = "none (fails at the scan limit)"
        else:
            rendered = str(x)
        lines.append(rendered if len(args.bound) == 1
                     else f"{bid}: {rendered}")
    _emit("\n".join(lines) + "\n", None)
    return 1 if missing else 0


def _cmd_monotone(args) -> int:
    if args.start < 1 or args.limit < args.start:
        raise ValueError("need 1 <= from <= to")
    rep = monotone_check(args.limit, start=args.start)
    _emit(rep.render(args.format), args.out)
    print(f"scanned {rep.pairs_examined} pairs in {rep.wall_seconds:.2f} s",
          file=sys.stderr)
    return 1 if rep.violations_total > 0 else 0


def _cmd_resume(args) -> int:
    report = resume_run(args.checkpoint,
                        checkpoint_interval=args.checkpoint_interval)
    _emit(report.render(args.format), args.out)
    print(f"resumed run finished in {report.wall_seconds:.2f} s",
          file=sys.stderr)
    return 1 if report.total_violations() > 0 else 0


_DISPATCH = {
    "constants": _cmd_constants,
    "expand": _cmd_expand,
    "tabulate": _cmd_tabulate,
    "verify": _cmd_verify,
    "crossover": _cmd_crossover,
    "monotone": _cmd_monotone,
    "resume": _cmd_resume,
}

_CONFIG_ERRORS = (
    UnknownBoundError,
    CatalogError,
    CapacityError,
    CheckpointError,
    SieveError,
    DomainError,
    series.SeriesError,
    ValueError,
    OSError,
)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.subcommand](args)
    except _CONFIG_ERRORS as exc:
        print(f"primemeans: error: {exc}", file=sys.stderr)
        return 2
    except VerifierError as exc:
        print(f"primemeans: internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
