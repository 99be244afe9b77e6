"""Command-line entry point.

Subcommands map one-to-one onto the library: coeffs, compare, enumerate,
classify-pairs, table1, chain, verify, extremal, closed-form, crossing,
poset-stats.  Output goes to stdout (or --output) in text, csv, or json;
results are byte-identical across runs and --jobs settings.  Exit status:
0 success, 1 a verification found violations, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .analysis import (
    build_chain,
    closed_form_coeff,
    crossing_analysis,
    extremal_sweep,
    verify_chain,
)
from .coeffs import coeffs_via_charpoly, coeffs_via_matchings, laplacian_coeffs
from .enumeration import enumerate_trees
from .errors import (
    InvalidTreeError,
    LimitError,
    ParameterError,
    PreconditionError,
    TreeFormatError,
)
from .ordering import (
    ClassificationRow,
    classification_table,
    classify,
    classify_all,
    poset_stats,
)
from .transform import verify_monotonicity
from .trees import Tree, format_tree, parse_trees

_CLASS_KINDS = {
    "diameter": "diameter",
    "max-degree": "max_degree",
    "starlike-legs": "starlike_legs",
    "pm-max-degree": "matched_max_degree",
}


def _read_trees(source: str) -> list[Tree]:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    trees = parse_trees(text)
    if not trees:
        raise ParameterError("input contains no trees")
    return trees


def _fmt(args: argparse.Namespace, default: str = "text") -> str:
    return args.format or default


def _rows_csv(rows: list[ClassificationRow]) -> str:
    lines = ["n,trees,type1,type2,incomparable,percent"]
    for r in rows:
        lines.append(f"{r.n},{r.trees},{r.type1},{r.type2},{r.incomparable},{r.percent}")
    return "\n".join(lines)


def _rows_json(rows: list[ClassificationRow]) -> str:
    return json.dumps(
        [
            {
                "n": r.n,
                "trees": r.trees,
                "type1": r.type1,
                "type2": r.type2,
                "incomparable": r.incomparable,
                "percent": r.percent,
                "equal_pairs": r.equal_pairs,
            }
            for r in rows
        ],
        indent=2,
    )


def _opt(value: Optional[int]) -> str:
    return "-" if value is None else str(value)


def _cmd_coeffs(args: argparse.Namespace) -> tuple[str, int]:
    engine = coeffs_via_charpoly if args.engine == "charpoly" else coeffs_via_matchings
    trees = _read_trees(args.input)
    vecs = [engine(t) for t in trees]
    if _fmt(args) == "json":
        payload = [{"n": t.n, "coeffs": list(v)} for t, v in zip(trees, vecs)]
        return json.dumps(payload, indent=2), 0
    return "\n".join(",".join(map(str, v)) for v in vecs), 0


def _cmd_compare(args: argparse.Namespace) -> tuple[str, int]:
    trees = _read_trees(args.input)
    if len(trees) != 2:
        raise ParameterError(f"compare needs exactly 2 trees, got {len(trees)}")
    pc = classify(laplacian_coeffs(trees[0]), laplacian_coeffs(trees[1]))
    smaller = {0: "first", 1: "second", None: "-"}[pc.smaller]
    fmt = _fmt(args)
    if fmt == "json":
        return (
            json.dumps(
                {
                    "tag": pc.tag.value,
                    "smaller": pc.smaller,
                    "first_diff": pc.first_diff,
                    "last_diff": pc.last_diff,
                },
                indent=2,
            ),
            0,
        )
    if fmt == "csv":
        return (
            "tag,smaller,first_diff,last_diff\n"
            f"{pc.tag.value},{smaller},{_opt(pc.first_diff)},{_opt(pc.last_diff)}",
            0,
        )
    return (
        f"{pc.tag.value} smaller={smaller} "
        f"first_diff={_opt(pc.first_diff)} last_diff={_opt(pc.last_diff)}",
        0,
    )


def _cmd_enumerate(args: argparse.Namespace) -> tuple[str, int]:
    lines = [format_tree(t) for t in enumerate_trees(args.n, force=args.force)]
    if _fmt(args) == "json":
        return json.dumps(lines, indent=2), 0
    return "\n".join(lines), 0


def _cmd_classify_pairs(args: argparse.Namespace) -> tuple[str, int]:
    row = classify_all(args.n, jobs=args.jobs, force=args.force)
    if _fmt(args, "csv") == "json":
        return _rows_json([row]), 0
    return _rows_csv([row]), 0


def _cmd_table1(args: argparse.Namespace) -> tuple[str, int]:
    rows = classification_table(args.max_n, jobs=args.jobs, force=args.force)
    if _fmt(args, "csv") == "json":
        return _rows_json(rows), 0
    return _rows_csv(rows), 0


def _cmd_chain(args: argparse.Namespace) -> tuple[str, int]:
    chain = build_chain(args.n)
    code = 0
    if args.verify:
        problems = verify_chain(chain)
        if problems:
            for p in problems:
                print(f"problem: {p}", file=sys.stderr)
            code = 1
        else:
            print(
                f"chain n={chain.n}: {len(chain.trees)} trees, "
                f"{chain.length} steps, all strictly dominated",
                file=sys.stderr,
            )
    lines = [format_tree(t) for t in chain.trees]
    if _fmt(args) == "json":
        return json.dumps({"n": chain.n, "steps": chain.length, "trees": lines}, indent=2), code
    return "\n".join(lines), code


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    theorem = args.theorem.replace("-", "_")
    report = verify_monotonicity(theorem, args.max_n, force=args.force)
    code = 0 if report.ok else 1
    if _fmt(args) == "json":
        payload = {
            "theorem": report.theorem,
            "max_n": report.n_max,
            "instances": report.instances,
            "violations": [
                {
                    "n": v.n,
                    "detail": v.detail,
                    "before": format_tree(v.before),
                    "after": format_tree(v.after),
                }
                for v in report.violations
            ],
        }
        return json.dumps(payload, indent=2), code
    lines = [
        f"theorem={report.theorem} max_n={report.n_max} "
        f"instances={report.instances} violations={len(report.violations)}"
    ]
    for v in report.violations:
        lines.append(
            f"violation n={v.n} {v.detail}: before={format_tree(v.before)} "
            f"after={format_tree(v.after)}"
        )
    return "\n".join(lines), code


def _cmd_extremal(args: argparse.Namespace) -> tuple[str, int]:
    raw_kind, eq, raw_value = args.klass.partition("=")
    if raw_kind not in _CLASS_KINDS or not eq:
        raise ParameterError(
            f"--class must look like kind=value with kind in "
            f"{sorted(_CLASS_KINDS)}, got {args.klass!r}"
        )
    try:
        value = int(raw_value)
    except ValueError:
        raise ParameterError(f"--class value must be an integer, got {raw_value!r}") from None
    sweep = extremal_sweep(
        args.n, _CLASS_KINDS[raw_kind], value, args.mode, force=args.force
    )
    fmt = _fmt(args)
    if fmt == "json":
        payload = {
            "n": sweep.n,
            "class": args.klass,
            "mode": sweep.mode,
            "class_size": sweep.class_size,
            "per_k": [
                {"k": k, "value": sweep.extreme_values[k], "winners": list(sweep.per_k[k])}
                for k in range(sweep.n + 1)
            ],
            "simultaneous": [
                {"code": c, "tree": format_tree(sweep.representatives[c])}
                for c in sweep.simultaneous
            ],
        }
        return json.dumps(payload, indent=2), 0
    if fmt == "csv":
        lines = ["k,value,winners"]
        for k in range(sweep.n + 1):
            lines.append(
                f"{k},{_opt(sweep.extreme_values[k])},{';'.join(sweep.per_k[k])}"
            )
        return "\n".join(lines), 0
    lines = [
        f"n={sweep.n} class={args.klass} mode={sweep.mode} size={sweep.class_size}"
    ]
    for k in range(sweep.n + 1):
        lines.append(
            f"k={k} value={_opt(sweep.extreme_values[k])} "
            f"winners={';'.join(sweep.per_k[k]) or '-'}"
        )
    if sweep.simultaneous:
        for c in sweep.simultaneous:
            lines.append(f"simultaneous {c} {format_tree(sweep.representatives[c])}")
    else:
        lines.append("simultaneous -")
    return "\n".join(lines), 0


def _cmd_closed_form(args: argparse.Namespace) -> tuple[str, int]:
    ks = [args.k] if args.k is not None else list(range(args.n + 1))
    rows = [(k, closed_form_coeff("T1", args.n, k), closed_form_coeff("T2", args.n, k)) for k in ks]
    if _fmt(args, "csv") == "json":
        return (
            json.dumps(
                [{"n": args.n, "k": k, "t1": a, "t2": b} for k, a, b in rows], indent=2
            ),
            0,
        )
    lines = ["n,k,t1,t2"]
    for k, a, b in rows:
        lines.append(f"{args.n},{k},{a},{b}")
    return "\n".join(lines), 0


def _cmd_crossing(args: argparse.Namespace) -> tuple[str, int]:
    result = crossing_analysis(args.n)
    ratio = "-" if result.ratio is None else f"{result.ratio:.6f}"
    if _fmt(args) == "json":
        return (
            json.dumps(
                {
                    "n": result.n,
                    "k_star": result.k_star,
                    "ratio": result.ratio,
                    "x0": result.x0,
                },
                indent=2,
            ),
            0,
        )
    return (
        f"n={result.n} k_star={_opt(result.k_star)} ratio={ratio} x0={result.x0:.9f}",
        0,
    )


def _cmd_poset_stats(args: argparse.Namespace) -> tuple[str, int]:
    stats = poset_stats(args.n, force=args.force)
    fmt = _fmt(args)
    if fmt == "json":
        return (
            json.dumps(
                {
                    "n": stats.n,
                    "trees": stats.trees,
                    "distinct_vectors": stats.distinct_vectors,
                    "longest_chain": stats.longest_chain,
                    "max_antichain": stats.max_antichain,
                },
                indent=2,
            ),
            0,
        )
    if fmt == "csv":
        return (
            "n,trees,distinct,longest_chain,max_antichain\n"
            f"{stats.n},{stats.trees},{stats.distinct_vectors},"
            f"{stats.longest_chain},{stats.max_antichain}",
            0,
        )
    return (
        f"n={stats.n} trees={stats.trees} distinct={stats.distinct_vectors} "
        f"longest_chain={stats.longest_chain} max_antichain={stats.max_antichain}",
        0,
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treelap",
        description="Exact Laplacian coefficients of trees and the domination order.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "csv", "json"], default=None,
        help="output format (default depends on the subcommand)",
    )
    common.add_argument("--output", metavar="FILE", default=None, help="write here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="parallel workers for pair sweeps")
    common.add_argument("--force", action="store_true", help="override the size guards")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("coeffs", parents=[common], help="coefficient vector of input trees")
    sp.add_argument("input", nargs="?", default="-", help="tree file, - for stdin")
    sp.add_argument("--engine", choices=["matchings", "charpoly"], default="matchings")
    sp.set_defaults(func=_cmd_coeffs)

    sp = sub.add_parser("compare", parents=[common], help="classify a pair of input trees")
    sp.add_argument("input", nargs="?", default="-", help="tree file with two lines, - for stdin")
    sp.set_defaults(func=_cmd_compare)

    sp = sub.add_parser("enumerate", parents=[common], help="all isomorphism classes on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("classify-pairs", parents=[common], help="pair classification counts for one n")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_classify_pairs)

    sp = sub.add_parser("table1", parents=[common], help="classification rows for n = 3..max-n")
    sp.add_argument("--max-n", type=int, default=12, dest="max_n")
    sp.set_defaults(func=_cmd_table1)

    sp = sub.add_parser("chain", parents=[common], help="star-to-path domination chain")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="check strict domination of every step")
    sp.set_defaults(func=_cmd_chain)

    sp = sub.add_parser("verify", parents=[common], help="exhaustively check a monotonicity theorem")
    sp.add_argument(
        "--theorem",
        required=True,
        choices=["delta", "path_shift", "path-shift", "two_edge_shift", "two-edge-shift", "majorization"],
    )
    sp.add_argument("--max-n", type=int, required=True, dest="max_n")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("extremal", parents=[common], help="per-coefficient extremal trees of a class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument(
        "--class",
        required=True,
        dest="klass",
        metavar="KIND=VALUE",
        help="diameter=D, max-degree=D, starlike-legs=K, or pm-max-degree=D",
    )
    sp.add_argument("--mode", choices=["min", "max"], default="min")
    sp.set_defaults(func=_cmd_extremal)

    sp = sub.add_parser("closed-form", parents=[common], help="closed-form coefficients of the two diameter-(n-3) trees")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.set_defaults(func=_cmd_closed_form)

    sp = sub.add_parser("crossing", parents=[common], help="sign crossing of the closed-form difference")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_crossing)

    sp = sub.add_parser("poset-stats", parents=[common], help="longest chain and max antichain at one n")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_poset_stats)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 2
    try:
        text, code = args.func(args)
    except (
        TreeFormatError,
        InvalidTreeError,
        ParameterError,
        PreconditionError,
        LimitError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        try:
            Path(args.output).write_text(text + "\n")
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
