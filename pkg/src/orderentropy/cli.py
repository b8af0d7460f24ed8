"""Command-line front end.

Subcommands: inspect, count, enumerate, entropy, dual, history, verify,
suite.  Orders come in either as expressions (``--expr "(x1*x2)|x3"``) or as
poset files (``--poset-file``, the ``poset n=<N>`` / ``cover i j`` format).
Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import _kernels
from .duality import dot_document, dual_expression, dual_order
from .entropy import check_conservation, entropy_pair, sorting_global_transform
from .errors import DuplicateVariableError, SizeError
from .history import PROGRAMS, SORTERS, invert, run_with_history, verify_sorting_bijection
from .poset import (
    ENUMERATION_CAP,
    Poset,
    count_extensions,
    enumerate_extensions,
    poset_from_text,
)
from .spexpr import build_order, count_sp, is_n_free, parse, to_text
from .suites import SCOPES, SORTING_CAP, SUITE_CAP, format_report, run_suite

USAGE_ERROR = 2
CHECK_FAILED = 1


def _load_order(args) -> tuple[Poset, str]:
    if getattr(args, "expr", None):
        e = parse(args.expr)
        order, _ = build_order(e)
        return order, to_text(e)
    text = Path(args.poset_file).read_text()
    p = poset_from_text(text)
    return p, f"poset file {args.poset_file}"


def _emit(doc: str, out: str | None) -> None:
    if out:
        Path(out).write_text(doc)
    else:
        sys.stdout.write(doc)


def cmd_inspect(args) -> int:
    order, label = _load_order(args)
    print(f"source: {label}")
    print(f"n: {order.n}")
    print(f"covers: {sorted(order.covers())}")
    print(f"relation pairs: {len(order.pairs())}")
    print(f"n-free: {is_n_free(order)}")
    if args.expr:
        print(f"extensions (formula): {count_sp(parse(args.expr))}")
    print(f"kernel backend: {_kernels.backend_name()}")
    if args.dot:
        if not args.expr:
            print("--dot needs --expr", file=sys.stderr)
            return USAGE_ERROR
        _emit(dot_document(parse(args.expr), include_dual=False), args.out)
    return 0


def cmd_count(args) -> int:
    if args.expr:
        e = parse(args.expr)
        value = count_extensions(build_order(e)[0]) if args.brute else count_sp(e)
    else:
        order, _ = _load_order(args)
        value = count_extensions(order)
    print(value)
    return 0


def cmd_enumerate(args) -> int:
    order, label = _load_order(args)
    space = enumerate_extensions(order)
    print(f"# {len(space)} root states of {label}")
    shown = 0
    for perm in space:
        print(" ".join(str(v) for v in perm))
        shown += 1
        if args.limit and shown >= args.limit:
            print(f"# ... {len(space) - shown} more")
            break
    return 0


def cmd_entropy(args) -> int:
    e = parse(args.expr)
    pair = entropy_pair(e)
    record = check_conservation(e)
    print(f"expression: {to_text(e)}")
    print(f"dual:       {to_text(dual_expression(e))}")
    print(f"primal count |R|:  {pair.primal_count}")
    print(f"dual count |R*|:   {pair.dual_count}")
    print(f"H_q: {pair.h_q:.6f} bits")
    print(f"H_p: {pair.h_p:.6f} bits")
    print(f"H_max: {pair.h_max:.6f} bits")
    verdict = "holds" if record.holds else "VIOLATED"
    print(
        f"exact product: {record.primal_count} * {record.dual_count} "
        f"= {record.product} = {record.n}!  [{verdict}]"
    )
    if args.trace:
        print("proof trace (post-order):")
        for step in record.steps:
            sizes = (
                ""
                if step.left_size is None
                else f" split {step.left_size}+{step.right_size} binom {step.binomial}"
            )
            print(
                f"  {step.case:<8} {step.expr}: |R|={step.primal_count} "
                f"|R*|={step.dual_count} product={step.product}={step.n}!{sizes}"
            )
    return 0 if record.holds else CHECK_FAILED


def cmd_dual(args) -> int:
    e = parse(args.expr)
    d = dual_expression(e)
    print(f"expression: {to_text(e)}")
    print(f"dual:       {to_text(d)}")
    print(f"|R|  = {count_sp(e)}")
    print(f"|R*| = {count_sp(d)}")
    print(f"dual covers: {sorted(dual_order(e).covers())}")
    if args.dot:
        _emit(dot_document(e, include_dual=True), args.out)
    return 0


def cmd_history(args) -> int:
    entry = PROGRAMS.get(args.sorter)
    if entry is None:
        print(f"unknown program {args.sorter!r}; have {sorted(PROGRAMS)}", file=sys.stderr)
        return USAGE_ERROR
    n = args.n
    if not entry.supports(n):
        print(f"program {entry.name} does not support n={n}", file=sys.stderr)
        return USAGE_ERROR
    if args.input:
        perm = tuple(int(v) for v in args.input.split(","))
        if len(perm) != n:
            print(f"--input needs {n} values", file=sys.stderr)
            return USAGE_ERROR
    else:
        perm = tuple(range(n, 0, -1))
    state = run_with_history(entry.program, perm)
    print(f"program: {entry.name}, input labels {perm}")
    for event in state.trace:
        if event[0] == "compare":
            _, a, b, r = event
            print(f"  compare pos {a} vs pos {b} -> {'<' if r < 0 else '>'}")
        else:
            _, a, b = event
            print(f"  swap pos {a} <-> pos {b}")
    print("final state (position: (origin, label)):")
    positions = "  pos:    " + " ".join(f"{i:>3}" for i in range(1, n + 1))
    origins = "  origin: " + " ".join(f"{o:>3}" for o in state.origins())
    labels = "  label:  " + " ".join(f"{v:>3}" for v in state.labels())
    print(positions)
    print(origins)
    print(labels)
    if entry.is_sorter:
        print(f"inverse of input: {invert(perm)}")
    return 0


def cmd_verify(args) -> int:
    if args.sorter not in SORTERS:
        print(f"unknown sorter {args.sorter!r}; have {sorted(SORTERS)}", file=sys.stderr)
        return USAGE_ERROR
    entry = SORTERS[args.sorter]
    if not entry.supports(args.n):
        print(f"sorter {entry.name} does not support n={args.n}", file=sys.stderr)
        return USAGE_ERROR
    report = verify_sorting_bijection(args.sorter, args.n, strict=False)
    print(f"sorter: {report.sorter}  n={report.n}  inputs={report.inputs}")
    print(f"outputs sorted:          {report.outputs_sorted}")
    print(f"origins == inverse:      {report.origins_equal_inverse}")
    print(f"origins cover all perms: {report.origins_cover_all_permutations}")
    print(f"decode roundtrip:        {report.decode_roundtrip}")
    transform = sorting_global_transform(args.n)
    print(
        f"global transform: {transform.input_state.describe()} -> "
        f"{transform.output_state.describe()} "
        f"(weights {transform.input_state.total_weight()} = "
        f"{transform.output_state.total_weight()})"
    )
    for failure in report.failures[:10]:
        print(f"  failure: {failure}")
    return 0 if report.passed else CHECK_FAILED


def cmd_suite(args) -> int:
    results = run_suite(args.scope, args.max_n)
    print(format_report(results, args.scope))
    return 0 if all(r.passed for r in results) else CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="orderentropy",
        description="Series-parallel order algebra, entropy conservation, "
        "and comparison-based computation with history.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_source(p, file_ok=True):
        p.add_argument("--expr", help="SP expression, e.g. '((x1*x2)|x3)*x4'")
        if file_ok:
            p.add_argument("--poset-file", help="poset interchange file")

    p = sub.add_parser("inspect", help="show an order's structure")
    add_source(p)
    p.add_argument("--dot", action="store_true", help="emit DOT of the Hasse diagram")
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.set_defaults(fn=cmd_inspect)

    p = sub.add_parser("count", help="number of root states")
    add_source(p)
    p.add_argument(
        "--brute",
        action="store_true",
        help="force the backtracking count even for expressions",
    )
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("enumerate", help=f"list root states (n <= {ENUMERATION_CAP})")
    add_source(p)
    p.add_argument("--limit", type=int, default=0, help="print at most this many")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("entropy", help="entropy pair and conservation check")
    add_source(p, file_ok=False)
    p.add_argument("--trace", action="store_true", help="print the proof recursion")
    p.set_defaults(fn=cmd_entropy)

    p = sub.add_parser("dual", help="dual expression/order, optional DOT figure")
    add_source(p, file_ok=False)
    p.add_argument("--dot", action="store_true", help="emit DOT with both diagrams")
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("history", help="run a program with history, print the trace")
    p.add_argument("--sorter", required=True, help=f"one of {sorted(PROGRAMS)}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", help="comma-separated permutation, default n..1")
    p.set_defaults(fn=cmd_history)

    p = sub.add_parser("verify", help="exhaustive sorting-bijection check")
    p.add_argument("--sorter", required=True, help=f"one of {sorted(SORTERS)}")
    p.add_argument("--n", type=int, required=True, help="size (<= 8)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("suite", help="run a verification suite")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.set_defaults(fn=cmd_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify" and args.n > SORTING_CAP:
        print(f"verify is exhaustive; n capped at {SORTING_CAP}", file=sys.stderr)
        return USAGE_ERROR
    if args.command == "suite":
        cap = SORTING_CAP if args.scope == "sorting" else SUITE_CAP
        if not 1 <= args.max_n <= cap:
            print(f"--max-n must be in 1..{cap} for scope {args.scope}", file=sys.stderr)
            return USAGE_ERROR
    if getattr(args, "expr", None) is None and getattr(args, "poset_file", None) is None:
        if args.command in ("inspect", "count", "enumerate", "entropy", "dual"):
            print("need --expr or --poset-file", file=sys.stderr)
            return USAGE_ERROR
    try:
        return args.fn(args)
    except (SyntaxError, DuplicateVariableError) as exc:
        print(f"expression error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (SizeError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
