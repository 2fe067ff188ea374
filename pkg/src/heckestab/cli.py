"""Command line front end.

Subcommands map one-to-one onto library calls.  Output is deterministic:
no timestamps or wall times reach stdout (timing goes only into cache
records), and every listing is emitted in a fixed order.  Exit codes:
0 success, 1 usage or domain errors, 2 broken invariants or failed
verification, 3 exceeded resource budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .cache import append_entry, lookup
from .config import DEFAULT_SEED, DEFAULT_SHARDS
from .constants import METHODS, fit_stability, structconst
from .cosets import canonical_rep, coset_type
from .errors import ConsistencyError, DomainError, ResourceBudgetError
from .orbits import find_orbits
from .partitions import Partition
from .perms import Permutation
from .verify import SUITES, run_suite

_UNLIMITED = 10**30


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected N or A..B, got {text!r}"
        ) from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return a, b


def _paren(p: Partition) -> str:
    return f"({p})" if p else "-"


def _budget(args) -> int | None:
    return _UNLIMITED if args.force else args.budget


def _add_triple(sp) -> None:
    sp.add_argument(
        "--mu", type=_partition_arg, required=True, metavar="PARTS",
        help="stable type, comma separated parts; - for empty",
    )
    sp.add_argument("--lam", type=_partition_arg, required=True, metavar="PARTS")
    sp.add_argument("--nu", type=_partition_arg, required=True, metavar="PARTS")


def _add_budget(sp) -> None:
    sp.add_argument("--budget", type=int, default=None, metavar="N",
                    help="largest enumeration this invocation may attempt")
    sp.add_argument("--force", action="store_true",
                    help="lift the work budget entirely")


def _add_format(sp) -> None:
    sp.add_argument("--format", choices=("table", "json", "csv"),
                    default="table", dest="fmt")


def build_parser() -> _Parser:
    parser = _Parser(prog="heckestab")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True,
                               parser_class=_Parser)

    sp = sub.add_parser("coset-type",
                        help="coset type of one permutation")
    sp.add_argument("perm", help="cycle form like '(1 3)(2 4)' or one-line '3 2 1'")
    sp.add_argument("--n", type=int, required=True, help="ambient rank")

    sp = sub.add_parser("rep",
                        help="canonical representative of a double coset")
    sp.add_argument("--mu", type=_partition_arg, required=True, metavar="PARTS")

    sp = sub.add_parser("structconst",
                        help="one structure constant")
    _add_triple(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("auto",) + METHODS + ("all",),
                    default="auto")
    sp.add_argument("--shards", type=int, default=DEFAULT_SHARDS)
    sp.add_argument("--cache", metavar="PATH", default=None,
                    help="JSONL file to append results to")
    _add_budget(sp)
    _add_format(sp)

    sp = sub.add_parser("fit",
                        help="stability fit over a rank range")
    _add_triple(sp)
    sp.add_argument("--range", type=_range_arg, required=True, dest="rank_range",
                    metavar="A..B")
    sp.add_argument("--method", choices=("auto",) + METHODS, default="auto")
    sp.add_argument("--shards", type=int, default=DEFAULT_SHARDS)
    sp.add_argument("--cache", metavar="PATH", default=None)
    _add_budget(sp)
    _add_format(sp)

    sp = sub.add_parser("orbits",
                        help="two-sided orbit decomposition of the pair set")
    _add_triple(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--target", choices=("restricted", "full"),
                    default="restricted")
    _add_budget(sp)
    _add_format(sp)

    sp = sub.add_parser("verify",
                        help="run self-check suites")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--n-max", type=int, default=2, dest="n_max")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    _add_format(sp)

    return parser


def _cmd_coset_type(args) -> int:
    x = Permutation.parse(args.perm)
    full = coset_type(x, args.n)
    print(f"{_paren(full)} / stable {_paren(full.stable_form())}")
    return 0


def _cmd_rep(args) -> int:
    print(canonical_rep(args.mu).cycle_string())
    return 0


def _entry_dict(entry) -> dict:
    return {
        "mu": str(entry.mu),
        "lambda": str(entry.lam),
        "nu": str(entry.nu),
        "n": entry.n,
        "b": str(entry.b),
        "method": entry.method,
    }


def _cmd_structconst(args) -> int:
    budget = _budget(args)
    entries = []
    if args.method == "all":
        values = {}
        for method in METHODS:
            if method == "orbit" and args.n < (
                args.mu.weight + args.lam.weight + args.nu.weight
            ):
                continue
            t0 = time.perf_counter()
            entry = structconst(args.mu, args.lam, args.nu, args.n,
                                method=method, budget=budget, shards=args.shards)
            entries.append((entry, int((time.perf_counter() - t0) * 1000)))
            values[method] = entry.b
        if len(set(values.values())) > 1:
            raise ConsistencyError(f"methods disagree: {values}")
    else:
        t0 = time.perf_counter()
        entry = structconst(args.mu, args.lam, args.nu, args.n,
                            method=args.method, budget=budget, shards=args.shards)
        entries.append((entry, int((time.perf_counter() - t0) * 1000)))
    if args.cache:
        for entry, wall in entries:
            append_entry(args.cache, entry, __version__, wall)
    first = entries[0][0]
    if args.fmt == "json":
        out = _entry_dict(first)
        if args.method == "all":
            out["method"] = "all"
            out["methods"] = sorted(e.method for e, _ in entries)
        print(json.dumps(out, sort_keys=True))
    elif args.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["mu", "lambda", "nu", "n", "method", "b"])
        for entry, _ in entries:
            writer.writerow([entry.mu, entry.lam, entry.nu, entry.n,
                             entry.method, entry.b])
    else:
        print(f"b = {first.b}")
    return 0


def _cmd_fit(args) -> int:
    budget = _budget(args)
    lo, hi = args.rank_range
    if hi - lo < 1:
        raise DomainError("stability fitting needs at least two ranks")
    points = []
    for n in range(lo, hi + 1):
        rec = None
        if args.cache:
            rec = lookup(args.cache, args.mu, args.lam, args.nu, n,
                         None if args.method == "auto" else args.method)
        if rec is not None:
            points.append((n, rec.entry.b))
            continue
        t0 = time.perf_counter()
        entry = structconst(args.mu, args.lam, args.nu, n,
                            method=args.method, budget=budget, shards=args.shards)
        wall = int((time.perf_counter() - t0) * 1000)
        if args.cache:
            append_entry(args.cache, entry, __version__, wall)
        points.append((n, entry.b))
    fit = fit_stability(points, args.nu.weight, args.mu, args.lam)
    w = args.nu.weight
    if args.fmt == "json":
        out = {
            "points": [[n, str(b)] for n, b in points],
            "normalized": [[n, str(g)] for n, g in fit.normalized],
            "stable": fit.stable,
        }
        if fit.stable:
            out["window_start"] = fit.window_start
            out["degree"] = fit.degree
            out["integral"] = fit.is_integral
            out["g"] = fit.polynomial.format()
            out["g_coefficients"] = [str(c) for c in fit.polynomial.coefficients]
            out["g_halved_scale"] = fit.remark_scaled.format()
            out["residuals"] = [str(r) for r in fit.residuals]
        print(json.dumps(out, sort_keys=True))
        return 0
    if args.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "b", "g"])
        for (n, b), (_, g) in zip(points, fit.normalized):
            writer.writerow([n, b, g])
        return 0
    for (n, b), (_, g) in zip(points, fit.normalized):
        print(f"n={n}  b={b}  g={g}")
    if not fit.stable:
        print("no stable window")
        return 0
    print(f"stable window: n >= {fit.window_start}")
    print(f"g(n) = {fit.polynomial.format()}   with b = 2^(n-{w}) n! g(n)")
    print(f"degree {fit.degree}; integral coefficients: "
          f"{'yes' if fit.is_integral else 'no'}")
    print(f"halved scale: h(n) = {fit.remark_scaled.format()}   "
          f"with b = 2^(n-1) n! h(n)")
    return 0


def _cmd_orbits(args) -> int:
    records = find_orbits(args.mu, args.lam, args.nu, args.n,
                          target=args.target, budget=_budget(args))
    if args.fmt == "json":
        out = []
        for rec in records:
            out.append({
                "size": rec.size_at[args.n],
                "magnitude": rec.magnitude,
                "product_weight": rec.product_weight,
                "split_rank": rec.split_rank,
                "x": rec.representative[0].cycle_string(),
                "y": rec.representative[1].cycle_string(),
            })
        print(json.dumps(out, sort_keys=True))
        return 0
    if args.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["size", "magnitude", "product_weight", "split_rank",
                         "x", "y"])
        for rec in records:
            writer.writerow([rec.size_at[args.n], rec.magnitude,
                             rec.product_weight, rec.split_rank,
                             rec.representative[0].cycle_string(),
                             rec.representative[1].cycle_string()])
        return 0
    print(f"orbits: {len(records)}")
    for i, rec in enumerate(records, 1):
        split = "?" if rec.split_rank is None else rec.split_rank
        print(f"{i}: size={rec.size_at[args.n]} magnitude={rec.magnitude} "
              f"product_weight={rec.product_weight} split_rank={split} "
              f"x={rec.representative[0].cycle_string()} "
              f"y={rec.representative[1].cycle_string()}")
    return 0


def _cmd_verify(args) -> int:
    rows = run_suite(args.suite, n_max=args.n_max, seed=args.seed)
    failures = [r for r in rows if not r.passed]
    if args.fmt == "json":
        print(json.dumps(
            [
                {"suite": r.suite, "name": r.name, "passed": r.passed,
                 "detail": r.detail}
                for r in rows
            ],
            sort_keys=True,
        ))
        return 2 if failures else 0
    for r in rows:
        if r.passed:
            print(f"ok   {r.suite}.{r.name}")
        else:
            print(f"FAIL {r.suite}.{r.name}: {r.detail}")
    print(f"{len(rows)} checks, {len(failures)} failures")
    if failures:
        print(json.dumps(
            [{"suite": r.suite, "name": r.name, "detail": r.detail}
             for r in failures],
            sort_keys=True,
        ))
        return 2
    return 0


_COMMANDS = {
    "coset-type": _cmd_coset_type,
    "rep": _cmd_rep,
    "structconst": _cmd_structconst,
    "fit": _cmd_fit,
    "orbits": _cmd_orbits,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 2
    except ResourceBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
