"""Command-line interface.

Exit status: 0 on success or a confirmed claim, 1 when a checked claim is
refuted, 2 on usage or input errors.  Rationals are always written as exact
``"p/q"`` strings next to a human-readable ``approx`` field.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import __version__
from .enumeration import CAP_ENV, CONSTRAINTS, TreeClass, count_free_trees, free_trees, trees_in_class
from .errors import HararyError
from .families import FAMILY_KINDS, FamilySpec, make_family
from .indices import approx, harary_index, rational_str, wiener_index
from .transforms import delta_transform, path_shift
from .trees import (
    Tree,
    canonical_code,
    degree_profile,
    distances,
    format_edge_list,
    independence_number,
    matching_number,
    metric_profile,
    parse_edge_list,
)
from .verify import (
    CHAINS,
    CLAIMS,
    chain_check,
    check_claim,
    conjecture_scan,
    reports_to_csv,
    reports_to_json,
)


class UsageError(Exception):
    """Bad command-line input; the message names the offending flag."""


def parse_tree_file(path: str) -> Tree:
    """Read a tree in edge-list format from ``path`` (``-`` for stdin)."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_edge_list(text)


def tree_summary(t: Tree) -> dict:
    dm = distances(t)
    deg = degree_profile(t)
    met = metric_profile(t, dm)
    h = harary_index(t, dm)
    return {
        "n": t.n,
        "harary": rational_str(h),
        "approx": approx(h),
        "wiener": wiener_index(t, dm),
        "pendent_count": deg.pendent_count,
        "degree_two_count": deg.degree_two_count,
        "max_degree": deg.max_degree,
        "matching_number": matching_number(t),
        "independence_number": independence_number(t),
        "diameter": met.diameter,
        "radius": met.radius,
        "centers": list(met.centers),
        "code": canonical_code(t),
    }


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _csv_rows(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow({k: ";".join(map(str, v)) if isinstance(v, list) else v for k, v in row.items()})
    return buf.getvalue()


def _int_list(flag: str, raw: str | None):
    if raw is None:
        return None
    try:
        return tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{flag}: expected comma-separated integers, got {raw!r}") from None


def _parse_filters(raw: list[str]) -> dict[str, int]:
    out = {}
    aliases = {"d": "diameter", "r": "radius", "Delta": "delta", "max_degree": "delta"}
    for item in raw:
        key, sep, value = item.partition("=")
        key = aliases.get(key.strip(), key.strip())
        if not sep or key not in CONSTRAINTS:
            raise UsageError(f"--filter: expected NAME=VALUE with NAME in {', '.join(CONSTRAINTS)}, got {item!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"--filter: value for {key} must be an integer, got {value!r}") from None
    return out


# ---------------------------------------------------------------------------
# Subcommands


def cmd_compute(args, out) -> int:
    t = parse_tree_file(args.input)
    summary = tree_summary(t)
    out.write(_csv_rows([summary]) if args.emit == "csv" else _dump(summary))
    return 0


def cmd_family(args, out) -> int:
    params = {
        "n": args.n, "m": args.m, "delta": args.delta, "k": args.k, "d": args.d, "i": args.i,
        "lengths": _int_list("--lengths", args.lengths),
        "pendants": _int_list("--pendants", args.pendants),
    }
    spec = FamilySpec(args.family, {k: v for k, v in params.items() if v is not None})
    t = make_family(spec)
    if args.emit == "edges":
        out.write(format_edge_list(t))
    elif args.emit == "codes":
        out.write(canonical_code(t) + "\n")
    else:
        out.write(_dump({"family": str(spec), "edges": [list(e) for e in t.edges], **tree_summary(t)}))
    return 0


def cmd_transform(args, out) -> int:
    t = parse_tree_file(args.input)
    if args.op == "delta":
        t2 = delta_transform(t, args.at, args.to)
    else:
        if args.long_end is None or args.short_end is None:
            raise UsageError("--op shift needs --long-end and --short-end")
        t2 = path_shift(t, args.at, args.long_end, args.short_end)
    if args.emit == "edges":
        out.write(format_edge_list(t2))
    else:
        before, after = harary_index(t), harary_index(t2)
        out.write(_dump({
            "op": args.op, "at": args.at,
            "before": {"harary": rational_str(before), "approx": approx(before), "code": canonical_code(t)},
            "after": {"harary": rational_str(after), "approx": approx(after), "code": canonical_code(t2)},
            "edges": [list(e) for e in t2.edges],
        }))
    return 0


def cmd_enumerate(args, out) -> int:
    filters = _parse_filters(args.filter)
    if args.emit == "count" and not filters:
        if args.n < 1:
            raise UsageError(f"--n must be >= 1, got {args.n}")
        out.write(f"{count_free_trees(args.n)}\n")
        return 0
    if filters:
        stream = trees_in_class(TreeClass(args.n, **filters), args.allow_large, args.workers)
    else:
        stream = free_trees(args.n, args.allow_large)
    if args.emit == "count":
        out.write(f"{sum(1 for _ in stream)}\n")
    elif args.emit == "codes":
        for t in stream:
            out.write(canonical_code(t) + "\n")
    else:
        first = True
        for t in stream:
            if not first:
                out.write("\n")
            out.write(format_edge_list(t))
            first = False
    return 0


def _emit_reports(reports, args, out) -> int:
    if args.emit == "csv":
        out.write(reports_to_csv(reports))
    else:
        out.write(reports_to_json(reports, timing=args.timing))
    return 0 if all(r.ok for r in reports) else 1


def cmd_verify(args, out) -> int:
    claims = list(CLAIMS) if args.claim == "all" else [args.claim]
    reports = [check_claim(c, args.n_max, args.n_min, args.workers) for c in claims]
    return _emit_reports(reports, args, out)


def cmd_chains(args, out) -> int:
    chains = CHAINS if args.chain == "all" else (args.chain,)
    if args.n is not None:
        orders = [args.n]
    elif args.n_max is not None:
        orders = list(range(5, args.n_max + 1))
    else:
        raise UsageError("chains needs --n or --n-max")
    reports = [chain_check(c, n) for c in chains for n in orders]
    return _emit_reports(reports, args, out)


def cmd_conjecture(args, out) -> int:
    deltas = args.delta or [3, 4]
    reports = [conjecture_scan(args.n_max, d, args.workers, args.n_min, args.allow_large) for d in deltas]
    return _emit_reports(reports, args, out)


# ---------------------------------------------------------------------------
# Parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="harary", description="Exact Harary/Wiener indices and extremal tree verification.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="indices and invariants of one tree")
    c.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    c.add_argument("--emit", choices=("json", "csv"), default="json")
    c.set_defaults(func=cmd_compute)

    f = sub.add_parser("family", help="construct a named tree")
    f.add_argument("--family", required=True, choices=FAMILY_KINDS)
    for flag in ("--n", "--m", "--delta", "--k", "--d", "--i"):
        f.add_argument(flag, type=int)
    f.add_argument("--lengths", help="starlike path lengths, e.g. 3,2,1")
    f.add_argument("--pendants", help="caterpillar pendant counts p_1..p_{d-1}, e.g. 0,2,0")
    f.add_argument("--emit", choices=("edges", "json", "codes"), default="json")
    f.set_defaults(func=cmd_family)

    t = sub.add_parser("transform", help="apply a Harary-monotone transformation")
    t.add_argument("--input", required=True)
    t.add_argument("--op", required=True, choices=("delta", "shift"))
    t.add_argument("--at", required=True, type=int, help="vertex carrying the pendant paths")
    t.add_argument("--to", type=int, help="delta: neighbour receiving the moved paths")
    t.add_argument("--long-end", type=int)
    t.add_argument("--short-end", type=int)
    t.add_argument("--emit", choices=("edges", "json"), default="json")
    t.set_defaults(func=cmd_transform)

    e = sub.add_parser("enumerate", help="all non-isomorphic trees of one order")
    e.add_argument("--n", required=True, type=int)
    e.add_argument("--filter", action="append", default=[], metavar="NAME=VALUE",
                   help=f"class constraint, NAME in {', '.join(CONSTRAINTS)}; repeatable")
    e.add_argument("--emit", choices=("codes", "edges", "count"), default="codes")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--allow-large", action="store_true", help=f"exceed the enumeration cap (or set {CAP_ENV})")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="check an extremal claim exhaustively")
    v.add_argument("--claim", required=True, choices=tuple(CLAIMS) + ("all",))
    v.add_argument("--n-max", type=int)
    v.add_argument("--n-min", type=int)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--emit", choices=("json", "csv"), default="json")
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds (output no longer reproducible)")
    v.set_defaults(func=cmd_verify)

    ch = sub.add_parser("chains", help="check a strictly increasing family chain")
    ch.add_argument("--chain", default="all", choices=CHAINS + ("all",))
    ch.add_argument("--n", type=int)
    ch.add_argument("--n-max", type=int, help="check every order 5..N")
    ch.add_argument("--emit", choices=("json", "csv"), default="json")
    ch.add_argument("--timing", action="store_true")
    ch.set_defaults(func=cmd_chains)

    cj = sub.add_parser("conjecture", help="Volkmann-tree maximality scan")
    cj.add_argument("--n-max", required=True, type=int)
    cj.add_argument("--n-min", type=int)
    cj.add_argument("--delta", type=int, action="append", help="maximum degree; repeatable (default 3 and 4)")
    cj.add_argument("--workers", type=int, default=1)
    cj.add_argument("--allow-large", action="store_true")
    cj.add_argument("--emit", choices=("json", "csv"), default="json")
    cj.add_argument("--timing", action="store_true")
    cj.set_defaults(func=cmd_conjecture)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "workers", 1) < 1:
            raise UsageError(f"--workers must be >= 1, got {args.workers}")
        return args.func(args, out)
    except UsageError as e:
        err.write(f"harary: usage error: {e}\n")
        return 2
    except (HararyError, OSError) as e:
        err.write(f"harary: {type(e).__name__}: {e}\n")
        return 2


def main() -> None:
    sys.exit(run())
