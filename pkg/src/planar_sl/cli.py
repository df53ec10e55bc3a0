"""Command-line interface.

Exit codes: 0 success (including a "not null-homologous" verdict), 1 failed
property check, 2 parse error, 3 validation error, 4 stabilization requested
for a braid that is not null-homologous.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .analysis import SlReport, analyze
from .model import ValidationError
from .parsing import Instance, ParseError, parse_instance
from .stabilize import StabilizedState, stabilize
from .verify import run_verify

EXIT_OK = 0
EXIT_PROPERTY_FAILURE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NOT_NULL_HOMOLOGOUS = 4


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Instance:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _Exit(EXIT_PARSE, f"cannot read {path}: {exc.strerror}")
    try:
        return parse_instance(text)
    except ParseError as exc:
        raise _Exit(EXIT_PARSE, f"{path}: parse error: {exc}")
    except ValidationError as exc:
        raise _Exit(EXIT_VALIDATION, f"{path}: invalid instance: {exc}")


def format_report(report: SlReport) -> str:
    er = report.exponents
    lines = [
        f"r = {report.matrix.r}, n = {er.n}",
        f"a_sigma = {er.a_sigma}",
        f"a_rho = {list(er.a_rho)}",
        f"T = {report.matrix.tolist()}",
        f"H_1(M) = {report.homology}",
        f"null-homologous: {'yes' if report.null_homologous else 'no'}",
    ]
    if report.null_homologous:
        lines += [
            f"s = {list(report.solution.s)}",
            f"sl = {report.sl}",
            f"well-defined (full rank T): {'yes' if report.well_defined else 'no'}",
            f"sl constant over ker T: {'yes' if report.kernel_variation_zero else 'no'}",
        ]
        for v, delta in report.kernel_deltas:
            lines.append(f"  kernel vector {list(v)}: sl changes by {delta}")
        c = report.census
        lines.append(
            f"census: e+ = {c.e_plus}, e- = {c.e_minus}, h+ - h- = {c.h_net}, "
            f"sl = {c.sl_census}"
        )
    else:
        lines.append(f"well-defined (full rank T): {'yes' if report.well_defined else 'no'}")
    return "\n".join(lines)


def cmd_analyze(path: str, as_json: bool = False) -> int:
    inst = _load(path)
    report = analyze(inst.open_book, inst.braid)
    if as_json:
        print(json.dumps(report.to_dict()))
    else:
        print(format_report(report))
    return EXIT_OK


def cmd_stabilize(path: str, sign: str, binding: int, count: int = 1, as_json: bool = False) -> int:
    inst = _load(path)
    r = inst.open_book.r
    if not 1 <= binding <= r:
        raise _Exit(EXIT_VALIDATION, f"binding index {binding} out of range 1..{r}")
    if count < 0:
        raise _Exit(EXIT_VALIDATION, "count must be nonnegative")
    report = analyze(inst.open_book, inst.braid)
    if not report.null_homologous:
        raise _Exit(EXIT_NOT_NULL_HOMOLOGOUS, "braid is not null-homologous; sl is undefined")

    mm = report.matrix
    step = 1 if sign == "pos" else -1
    state = StabilizedState(report.exponents, report.solution.s)
    for _ in range(count):
        state = stabilize(state, step, binding, mm)
    after = state.sl(mm)
    delta = after - report.sl
    expected = 0 if step == 1 else -2 * count
    if as_json:
        print(json.dumps({
            "sign": sign, "binding": binding, "count": count,
            "sl_before": report.sl, "sl_after": after,
            "delta": delta, "expected_delta": expected, "ok": delta == expected,
        }))
    else:
        print(f"sl before: {report.sl}")
        print(f"sl after {count} {sign} stabilization(s) about gamma_{binding}: {after}")
        print(f"delta: {delta} (expected {expected}) {'ok' if delta == expected else 'MISMATCH'}")
    return EXIT_OK if delta == expected else EXIT_PROPERTY_FAILURE


def cmd_verify(seed: int = 0, trials: int = 500) -> int:
    result = run_verify(seed, trials)
    print(result.summary())
    return EXIT_OK if result.ok else EXIT_PROPERTY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-sl",
        description="Self-linking numbers of braids in planar open books.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report sl and its certificates for an instance file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")

    p = sub.add_parser("stabilize", help="apply stabilizations and compare sl before/after")
    p.add_argument("file")
    p.add_argument("--sign", choices=("pos", "neg"), required=True)
    p.add_argument("--binding", type=int, required=True, metavar="K")
    p.add_argument("--count", type=int, default=1, metavar="M")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="check the invariants on random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=500)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args.file, args.json)
        if args.command == "stabilize":
            return cmd_stabilize(args.file, args.sign, args.binding, args.count, args.json)
        return cmd_verify(args.seed, args.trials)
    except _Exit as exc:
        print(f"planar-sl: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
