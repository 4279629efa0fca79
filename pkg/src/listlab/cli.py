"""Command-line harness: run, compare, gen, paper-examples.

Exit codes: 0 success, 2 input error, 3 unsupported algorithm/model
pair. Identical invocations produce byte-identical stdout, CSV and
trace output.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path

from .amr import AmrStepEvent, serve_amr
from .classic import CLASSIC_ALGORITHMS, ClassicStepEvent, run_classic
from .core import (
    ParseError,
    Workload,
    make_workload,
    parse_workload,
    serialize_workload,
    validate_workload,
)
from .costs import CostBreakdown, Unsupported, model_token, parse_model_token
from .workloads import InvalidSpec, generate, spec_from_dist_token

ALGORITHM_TOKENS = CLASSIC_ALGORITHMS + ("amr",)

CSV_HEADER = (
    "algorithm",
    "model",
    "access",
    "matching",
    "replacement",
    "exchange",
    "total",
    "n",
    "l",
    "buffer",
    "seed",
)


class CliError(Exception):
    """Carries the process exit code alongside the diagnostic."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class ComparisonRow:
    algorithm: str
    model: str
    access: int
    matching: int
    replacement: int
    exchange: int
    total: int
    n: int
    l: int
    buffer: int
    seed: int | None = None

    @classmethod
    def from_run(
        cls,
        algorithm: str,
        model: str,
        breakdown: CostBreakdown,
        workload: Workload,
        seed: int | None = None,
    ) -> "ComparisonRow":
        return cls(
            algorithm=algorithm,
            model=model,
            access=breakdown.access,
            matching=breakdown.matching,
            replacement=breakdown.replacement,
            exchange=breakdown.exchange,
            total=breakdown.total,
            n=workload.requests.n,
            l=workload.list.l,
            buffer=workload.buffer_capacity,
            seed=seed,
        )


def rows_to_csv(rows: list[ComparisonRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow(
            [
                r.algorithm,
                r.model,
                r.access,
                r.matching,
                r.replacement,
                r.exchange,
                r.total,
                r.n,
                r.l,
                r.buffer,
                "" if r.seed is None else r.seed,
            ]
        )
    return out.getvalue()


def rows_from_csv(text: str) -> list[ComparisonRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    rows = []
    for rec in reader:
        if len(rec) != len(CSV_HEADER):
            raise ValueError(f"unexpected CSV record {rec!r}")
        rows.append(
            ComparisonRow(
                algorithm=rec[0],
                model=rec[1],
                access=int(rec[2]),
                matching=int(rec[3]),
                replacement=int(rec[4]),
                exchange=int(rec[5]),
                total=int(rec[6]),
                n=int(rec[7]),
                l=int(rec[8]),
                buffer=int(rec[9]),
                seed=None if rec[10] == "" else int(rec[10]),
            )
        )
    return rows


def _pairs(pairs) -> str:
    return ";".join(f"{a}:{b}" for a, b in pairs)


def format_trace_line(ev: AmrStepEvent | ClassicStepEvent) -> str:
    if isinstance(ev, AmrStepEvent):
        matched = _pairs(ev.matched)
        inserted = _pairs(ev.inserted)
        evicted = _pairs(ev.evicted)
        flags = ";".join(str(j) for j in ev.flags_added)
        source = ev.source
    else:
        matched = inserted = evicted = flags = ""
        source = "list"
    return (
        f"t={ev.t} element={ev.element} source={source} position={ev.position} "
        f"cost={ev.access_cost} matched={matched} inserted={inserted} "
        f"evicted={evicted} flags_added={flags}"
    )


def _load_workload(path: str) -> Workload:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(2, f"cannot read {path}: {exc}") from None
    try:
        w = parse_workload(text)
    except ParseError as exc:
        raise CliError(2, f"{path}: {exc}") from None
    report = validate_workload(w)
    for msg in report.warnings:
        print(f"warning: {msg}", file=sys.stderr)
    if not report.ok:
        raise CliError(2, f"{path}: invalid workload: " + "; ".join(report.errors))
    return w


def _parse_model(token: str):
    try:
        return parse_model_token(token)
    except ValueError as exc:
        raise CliError(2, str(exc)) from None


def _execute(algorithm: str, model_tok: str | None, w: Workload):
    """Run one (algorithm, model) pair; returns (model token, breakdown, events)."""
    if algorithm == "amr":
        breakdown, events = serve_amr(w)
        return "amr", breakdown, events
    model = _parse_model(model_tok if model_tok is not None else "full")
    try:
        breakdown, events, _ = run_classic(algorithm, model, w)
    except Unsupported as exc:
        raise CliError(3, str(exc)) from None
    return model_token(model), breakdown, events


def cmd_run(args) -> int:
    w = _load_workload(args.workload)
    if args.algorithm == "amr" and args.model is not None:
        raise CliError(3, "the amr engine carries its own cost model; drop --model")
    mtok, breakdown, events = _execute(args.algorithm, args.model, w)
    print(
        f"algorithm={args.algorithm} model={mtok} "
        f"n={w.requests.n} l={w.list.l} buffer={w.buffer_capacity}"
    )
    print(
        f"access={breakdown.access} matching={breakdown.matching} "
        f"replacement={breakdown.replacement} exchange={breakdown.exchange} "
        f"total={breakdown.total}"
    )
    if args.trace:
        lines = "".join(format_trace_line(ev) + "\n" for ev in events)
        Path(args.trace).write_text(lines, encoding="utf-8")
    if args.csv:
        row = ComparisonRow.from_run(args.algorithm, mtok, breakdown, w)
        Path(args.csv).write_text(rows_to_csv([row]), encoding="utf-8")
    return 0


def _split_tokens(raw: str) -> list[str]:
    return [tok for tok in raw.split(",") if tok]


def cmd_compare(args) -> int:
    w = _load_workload(args.workload)
    algorithms = _split_tokens(args.algorithm)
    models = _split_tokens(args.model) if args.model else ["full"]
    for a in algorithms:
        if a not in ALGORITHM_TOKENS:
            raise CliError(2, f"unknown algorithm token {a!r}")
    rows = []
    for a in algorithms:
        if a == "amr":
            breakdown, _ = serve_amr(w)
            rows.append(ComparisonRow.from_run("amr", "amr", breakdown, w))
            continue
        for mt in models:
            model = _parse_model(mt)
            try:
                breakdown, _, _ = run_classic(a, model, w)
            except Unsupported as exc:
                print(f"skip {a} under {model_token(model)}: {exc}", file=sys.stderr)
                continue
            rows.append(ComparisonRow.from_run(a, model_token(model), breakdown, w))
    rows.sort(key=lambda r: (r.algorithm, r.model))
    text = rows_to_csv(rows)
    sys.stdout.write(text)
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
    return 0


def cmd_gen(args) -> int:
    try:
        spec = spec_from_dist_token(
            args.dist, list_size=args.list_size, length=args.length, seed=args.seed
        )
        w = generate(spec, buffer_capacity=args.buffer)
    except InvalidSpec as exc:
        raise CliError(2, str(exc)) from None
    text = serialize_workload(w)
    echo = (
        f"dist={args.dist} list-size={spec.list_size} length={w.requests.n} "
        f"seed={spec.seed} buffer={w.buffer_capacity}"
    )
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(echo)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
        print(echo, file=sys.stderr)
    return 0


@dataclass(frozen=True)
class ReferenceCheck:
    """A built-in workload with its known cost expectations."""

    name: str
    workload: Workload
    algorithm: str
    model: str | None
    expected: dict[str, int]


def builtin_reference_checks() -> tuple[ReferenceCheck, ...]:
    nine = "A B C D E F G H I".split()
    return (
        ReferenceCheck(
            "lookahead-illustration",
            make_workload(nine, "I E G D I E D A B I".split(), 3),
            "amr",
            None,
            {"total": 34, "access": 31, "matching": 3, "replacement": 0},
        ),
        ReferenceCheck(
            "lookahead-demonstration",
            make_workload(nine, "I E G D I E D B A I".split(), 3),
            "amr",
            None,
            {"total": 36, "access": 31, "matching": 4, "replacement": 1},
        ),
        ReferenceCheck(
            "reverse-order-mtf",
            make_workload(list("ABCDEFGHIJK"), list("KJIHGFEDCBA"), 3),
            "mtf",
            "full",
            {"total": 121},
        ),
    )


def run_reference_checks(checks) -> tuple[list[str], int]:
    lines = []
    passed = 0
    for c in checks:
        _, breakdown, _ = _execute(c.algorithm, c.model, c.workload)
        actual = {
            "total": breakdown.total,
            "access": breakdown.access,
            "matching": breakdown.matching,
            "replacement": breakdown.replacement,
            "exchange": breakdown.exchange,
        }
        ok = all(actual[key] == want for key, want in c.expected.items())
        detail = ", ".join(
            f"{key} expected={want} actual={actual[key]}" for key, want in c.expected.items()
        )
        lines.append(f"{c.name} [{c.algorithm}]: {'PASS' if ok else 'FAIL'} ({detail})")
        passed += ok
    return lines, passed


def cmd_paper_examples(args) -> int:
    checks = builtin_reference_checks()
    lines, passed = run_reference_checks(checks)
    for line in lines:
        print(line)
    print(f"{passed}/{len(checks)} pass")
    return 0 if passed == len(checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listlab",
        description="Simulate list-accessing algorithms under different cost models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run one algorithm over a workload file")
    p.add_argument("--workload", required=True, help="workload file path")
    p.add_argument("--algorithm", required=True, choices=ALGORITHM_TOKENS)
    p.add_argument("--model", help="full | partial | pd:<d> | centralized (classics only)")
    p.add_argument("--trace", help="write a per-request trace to this file")
    p.add_argument("--csv", help="write the breakdown as a one-row CSV to this file")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="run several algorithm/model pairs and tabulate")
    p.add_argument("--workload", required=True)
    p.add_argument("--algorithm", required=True, help="comma-separated algorithm tokens")
    p.add_argument("--model", help="comma-separated model tokens (default: full)")
    p.add_argument("--csv", help="also write the table to this file")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="generate a workload file")
    p.add_argument("--dist", required=True, help="uniform | zipf:<s> | burst:<len> | reverse")
    p.add_argument("--list-size", required=True, type=int)
    p.add_argument("--length", type=int, help="request count (reverse fixes it to list size)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--buffer", type=int, default=3)
    p.add_argument("-o", "--output", help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "paper-examples",
        help="check the built-in reference workloads against their known totals",
    )
    p.set_defaults(func=cmd_paper_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
