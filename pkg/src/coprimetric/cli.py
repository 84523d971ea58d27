"""Batch command-line front end.

    coprimetric fib --k 1 --from -5 --to 10
    coprimetric q --tuple 5,8 --target 1
    coprimetric dist --a 2,3 --b 5,8 --base golden
    coprimetric verify-qi --k 1 --ell 2 --max-index 30 --format csv
    coprimetric axioms --samples 1000 --max-value 60 --ell 2 --seed 42

Exit codes: 0 success / all checks passed, 1 verification failure or
counterexample found, 2 usage or parse error.  Output formats: table
(human), json, csv; identical configuration (including the seed)
produces byte-identical json/csv.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from ._backend import active_kernel
from .audit import run_axiom_audit
from .metric import Base, distance, make_tuple, q_point
from .qi import EmbeddingSpec, qi_scan
from .report import (
    color_enabled,
    emit,
    fmt_bool,
    fmt_real,
    paint,
    render_csv,
    render_json,
    render_table,
)
from .sequences import kfib_range

USAGE_ERROR = 2
CHECK_FAILED = 1


def _parse_tuple_literal(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError(f"malformed tuple literal {text!r}") from None
    if not values:
        raise ValueError(f"malformed tuple literal {text!r}")
    return values


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default: table)",
    )
    p.add_argument(
        "--output", default=None, metavar="PATH",
        help="write to a file instead of standard output",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coprimetric",
        description="exact coprime-tuple metric, minimal-L1 solver, and "
        "Fibonacci quasi-isometry verification",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"coprimetric {__version__} (solver kernel: {active_kernel()})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="print a k-Fibonacci index range")
    p.add_argument("--k", type=int, default=1, help="sequence parameter (default 1)")
    p.add_argument("--from", dest="start", type=int, required=True, metavar="N")
    p.add_argument("--to", dest="stop", type=int, required=True, metavar="N")
    _add_output_flags(p)

    p = sub.add_parser("q", help="minimal-L1 cost of a target over a tuple")
    p.add_argument("--tuple", dest="tuple_", required=True, metavar="A,B,...")
    p.add_argument("--target", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("dist", help="distance between two coprime tuples")
    p.add_argument("--a", required=True, metavar="A,B,...")
    p.add_argument("--b", required=True, metavar="A,B,...")
    p.add_argument(
        "--base", default="golden",
        help="golden | metallic:<k> | real:<decimal> (default golden)",
    )
    _add_output_flags(p)

    p = sub.add_parser("verify-qi", help="verify the embedding bounds on all pairs")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--max-index", dest="max_index", type=int, required=True)
    p.add_argument(
        "--experimental", action="store_true",
        help="allow ell > 2 with k > 1 (no pass/fail contract)",
    )
    p.add_argument("--threads", type=int, default=1)
    _add_output_flags(p)

    p = sub.add_parser("axioms", help="randomized audit of the metric axioms")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--max-value", dest="max_value", type=int, default=60)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument(
        "--seed", type=int, default=0,
        help="rng seed; 0 derives one from entropy and prints it (default 0)",
    )
    _add_output_flags(p)

    return parser


def _cmd_fib(args) -> int:
    if args.stop < args.start:
        raise ValueError(f"empty index range {args.start}..{args.stop}")
    values = kfib_range(args.k, args.start, args.stop)
    indices = range(args.start, args.stop + 1)
    if args.format == "json":
        payload = {
            "config": {
                "command": "fib",
                "k": args.k,
                "from": args.start,
                "to": args.stop,
            },
            "rows": [{"n": n, "value": v} for n, v in zip(indices, values)],
        }
        emit(render_json(payload), args.output)
    elif args.format == "csv":
        rows = [[str(args.k), str(n), str(v)] for n, v in zip(indices, values)]
        emit(render_csv(["k", "n", "value"], rows), args.output)
    else:
        rows = [[str(n), str(v)] for n, v in zip(indices, values)]
        emit(render_table(["n", f"F_{{{args.k},n}}"], rows), args.output)
    return 0


def _cmd_q(args) -> int:
    tup = make_tuple(_parse_tuple_literal(args.tuple_))
    qv = q_point(tup, args.target)
    coeffs = list(qv.witness.coeffs)
    if args.format == "json":
        payload = {
            "config": {"command": "q", "tuple": args.tuple_, "target": args.target},
            "tuple": list(tup.elements),
            "cardinality": len(tup),
            "target": args.target,
            "value": qv.value,
            "witness": coeffs,
        }
        emit(render_json(payload), args.output)
    elif args.format == "csv":
        row = [
            ";".join(str(e) for e in tup.elements),
            str(args.target),
            str(qv.value),
            ";".join(str(c) for c in coeffs),
            str(len(tup)),
        ]
        emit(render_csv(["tuple", "target", "value", "witness", "cardinality"], [row]), args.output)
    else:
        witness = " + ".join(
            f"{c}*{g}" for c, g in zip(coeffs, tup.elements)
        )
        emit(
            f"q_{tup}({args.target}) = {qv.value}\n"
            f"witness: {args.target} = {witness}\n",
            args.output,
        )
    return 0


def _cmd_dist(args) -> int:
    a = make_tuple(_parse_tuple_literal(args.a))
    b = make_tuple(_parse_tuple_literal(args.b))
    base = Base.parse(args.base)
    q_ab = max(q_point(a, t).value for t in b.elements)  # generators a, targets b
    q_ba = max(q_point(b, t).value for t in a.elements)
    d = distance(a, b, base)
    assert d.max_q == max(q_ab, q_ba)
    if args.format == "json":
        payload = {
            "config": {
                "command": "dist",
                "a": args.a,
                "b": args.b,
                "base": base.describe(),
            },
            "a": list(a.elements),
            "b": list(b.elements),
            "cardinality_a": len(a),
            "cardinality_b": len(b),
            "cross_cardinality": len(a) != len(b),
            "q_ab": q_ab,
            "q_ba": q_ba,
            "max_q": d.max_q,
            "log_value": d.log_value,
        }
        emit(render_json(payload), args.output)
    elif args.format == "csv":
        row = [
            ";".join(str(e) for e in a.elements),
            ";".join(str(e) for e in b.elements),
            str(q_ab),
            str(q_ba),
            str(d.max_q),
            base.describe(),
            fmt_real(d.log_value),
            fmt_bool(len(a) != len(b)),
        ]
        emit(
            render_csv(
                ["a", "b", "q_ab", "q_ba", "max_q", "base", "log_value", "cross_cardinality"],
                [row],
            ),
            args.output,
        )
    else:
        lines = [
            f"d({a}, {b}) = {fmt_real(d.log_value)}  [base {base.describe()}]",
            f"max_q = {d.max_q}  (q_a(b) = {q_ab}, q_b(a) = {q_ba})",
        ]
        if len(a) != len(b):
            lines.append(f"note: cross-cardinality comparison ({len(a)} vs {len(b)})")
        emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify_qi(args) -> int:
    spec = EmbeddingSpec(k=args.k, ell=args.ell, experimental=args.experimental)
    report = qi_scan(spec, args.max_index, threads=args.threads)
    base = Base.golden() if spec.k == 1 else Base.metallic_base(spec.k)
    if args.format == "json":
        payload = {
            "config": {
                "command": "verify-qi",
                "k": spec.k,
                "ell": spec.ell,
                "max_index": args.max_index,
                "experimental": spec.experimental,
                "threads": args.threads,
                "base": base.describe(),
            },
            "rows": [
                {
                    "n": r.n,
                    "m": r.m,
                    "gap": r.index_gap,
                    "q_nm": r.q_nm,
                    "q_mn": r.q_mn,
                    "max_q": r.max_q,
                    "lower_ok": r.lower_ok,
                    "upper_ok": r.upper_ok,
                    "lemma_lower_ok": r.lemma_lower_ok,
                    "lemma_upper_ok": r.lemma_upper_ok,
                    "log_display": r.log_display,
                    "row_pass": r.passed,
                }
                for r in report.rows
            ],
            "all_pass": report.all_pass,
        }
        emit(render_json(payload), args.output)
    elif args.format == "csv":
        rows = [
            [
                str(r.n),
                str(r.m),
                str(r.index_gap),
                str(r.q_nm),
                str(r.q_mn),
                str(r.max_q),
                fmt_bool(r.lower_ok),
                fmt_bool(r.upper_ok),
                fmt_bool(r.lemma_lower_ok),
                fmt_bool(r.lemma_upper_ok),
                fmt_real(r.log_display),
                fmt_bool(r.passed),
            ]
            for r in report.rows
        ]
        header = [
            "n", "m", "gap", "q_nm", "q_mn", "max_q",
            "lower_ok", "upper_ok", "lemma_lower_ok", "lemma_upper_ok",
            "log_display", "row_pass",
        ]
        emit(render_csv(header, rows), args.output)
    else:
        color = args.output is None and color_enabled(sys.stdout)
        cols = ["n", "m", "gap", "max_q", "log", "pass"]
        rows = [
            [
                str(r.n),
                str(r.m),
                str(r.index_gap),
                str(r.max_q),
                fmt_real(r.log_display),
                paint("ok", "32", color) if r.passed else paint("FAIL", "31", color),
            ]
            for r in report.rows
        ]
        verdict = (
            paint("all pairs pass", "32", color)
            if report.all_pass
            else paint("violations found", "31", color)
        )
        summary = (
            f"embedding k={spec.k} ell={spec.ell} base={base.describe()} "
            f"max_index={args.max_index}: {verdict}\n"
        )
        emit(render_table(cols, rows) + summary, args.output)
    return 0 if report.all_pass else CHECK_FAILED


def _cmd_axioms(args) -> int:
    seed = args.seed
    if seed == 0:
        seed = random.SystemRandom().getrandbits(64)
        print(f"seed derived from entropy: {seed}", file=sys.stderr)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must fit in 64 bits, got {seed}")
    audit = run_axiom_audit(args.samples, args.max_value, args.ell, seed)
    if args.format == "json":
        payload = {
            "config": {
                "command": "axioms",
                "samples": args.samples,
                "max_value": args.max_value,
                "ell": args.ell,
                "seed": seed,
            },
            "checks": {
                name: {"runs": runs, "violations": sum(
                    1 for v in audit.violations if v.check == name
                )}
                for name, runs in audit.checks_run.items()
            },
            "violations": [
                {"check": v.check, "detail": v.detail} for v in audit.violations
            ],
            "all_pass": audit.passed,
        }
        emit(render_json(payload), args.output)
    elif args.format == "csv":
        rows = [
            [name, str(runs), str(sum(1 for v in audit.violations if v.check == name))]
            for name, runs in audit.checks_run.items()
        ]
        emit(render_csv(["check", "runs", "violations"], rows), args.output)
    else:
        color = args.output is None and color_enabled(sys.stdout)
        lines = [
            f"axiom audit: samples={args.samples} max_value={args.max_value} "
            f"ell={args.ell} seed={seed}"
        ]
        for name, runs in audit.checks_run.items():
            n_bad = sum(1 for v in audit.violations if v.check == name)
            mark = paint("ok", "32", color) if n_bad == 0 else paint("FAIL", "31", color)
            lines.append(f"  {name:<22} runs={runs:<6} violations={n_bad}  {mark}")
        for v in audit.violations:
            lines.append(f"  counterexample [{v.check}]: {v.detail}")
        emit("\n".join(lines) + "\n", args.output)
    return 0 if audit.passed else CHECK_FAILED


_COMMANDS = {
    "fib": _cmd_fib,
    "q": _cmd_q,
    "dist": _cmd_dist,
    "verify-qi": _cmd_verify_qi,
    "axioms": _cmd_axioms,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:  # domain validation: bad tuples, bad ranges, ...
        print(f"coprimetric {args.command}: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
