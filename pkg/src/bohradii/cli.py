"""Command-line front end: radius queries, grid sweeps, functional checks, verification.

Exit codes: 0 ok, 1 malformed input, 2 domain error, 3 io error,
4 uncertified function, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .analytic import certify_bounded, record_to_function
from .errors import DomainError, NotApplicableError, PreconditionError
from .functionals import bohr_lhs
from .radii import Theorem, WeightPair, radius
from .verify import run_suite, witnesses_to_csv_rows

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3
EXIT_UNCERTIFIED = 4
EXIT_VERIFY = 5


def _fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(x, ".17g")


@dataclass(frozen=True)
class SweepRow:
    """One grid cell of a radius sweep; inadmissible cells carry NA fields."""

    alpha: float
    beta: float
    theorem: Theorem
    radius: Optional[float]
    regime: str
    residual: Optional[float]

    def to_csv(self) -> str:
        if self.radius is None:
            return f"{_fmt(self.alpha)},{_fmt(self.beta)},{self.theorem.value},NA,{self.regime},NA"
        return (
            f"{_fmt(self.alpha)},{_fmt(self.beta)},{self.theorem.value},"
            f"{_fmt(self.radius)},{self.regime},{_fmt(self.residual)}"
        )


class _ParseExit(Exception):
    def __init__(self, message: str):
        self.message = message


class _Parser(argparse.ArgumentParser):
    # The exit-code contract reserves 1 for malformed input; argparse's
    # default error path exits 2.
    def error(self, message: str):
        raise _ParseExit(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="bohradii", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_radius = sub.add_parser("radius", help="print one radius certificate")
    p_radius.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    p_radius.add_argument("--alpha", required=True, type=float)
    p_radius.add_argument("--beta", required=True, type=float)

    p_sweep = sub.add_parser("sweep", help="write a radius grid to CSV")
    p_sweep.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    p_sweep.add_argument("--alpha-min", required=True, type=float)
    p_sweep.add_argument("--alpha-max", required=True, type=float)
    p_sweep.add_argument("--beta-min", required=True, type=float)
    p_sweep.add_argument("--beta-max", required=True, type=float)
    p_sweep.add_argument("--steps", required=True, type=int)
    p_sweep.add_argument("--out", required=True)

    p_check = sub.add_parser("check", help="evaluate one functional on a function spec")
    p_check.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])
    p_check.add_argument("--alpha", required=True, type=float)
    p_check.add_argument("--beta", required=True, type=float)
    p_check.add_argument("--r", required=True, type=float)
    p_check.add_argument("--function", required=True, help="path to a JSON function record")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite", required=True,
        choices=["all", "below", "sharpness", "thresholds", "lemma24"],
    )
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--witness-csv", default=None)

    return parser


def _cmd_radius(args) -> int:
    w = WeightPair(args.alpha, args.beta)
    cert = radius(Theorem(args.theorem), w)
    bracket = (
        f"[{_fmt(cert.bracket.lo)}, {_fmt(cert.bracket.hi)}]"
        if cert.bracket is not None
        else "closed-form"
    )
    print(
        f"theorem={cert.theorem.value} alpha={_fmt(args.alpha)} beta={_fmt(args.beta)} "
        f"value={_fmt(cert.value)} regime={cert.regime} "
        f"residual={_fmt(cert.residual)} bracket={bracket}"
    )
    return EXIT_OK


def _cmd_sweep(args) -> int:
    theorem = Theorem(args.theorem)
    if args.steps < 2:
        raise DomainError(f"steps must be at least 2, got {args.steps}")
    if not (0.0 < args.alpha_min <= args.alpha_max <= 1.0):
        raise DomainError("alpha range must satisfy 0 < min <= max <= 1")
    if not (0.0 < args.beta_min <= args.beta_max):
        raise DomainError("beta range must satisfy 0 < min <= max")

    steps = args.steps
    rows = ["alpha,beta,theorem,radius,regime,residual"]
    for i in range(steps):
        alpha = args.alpha_min + i * (args.alpha_max - args.alpha_min) / (steps - 1)
        for j in range(steps):
            beta = args.beta_min + j * (args.beta_max - args.beta_min) / (steps - 1)
            try:
                cert = radius(theorem, WeightPair(alpha, beta))
                row = SweepRow(alpha, beta, theorem, cert.value, cert.regime, cert.residual)
            except DomainError:
                row = SweepRow(alpha, beta, theorem, None, "inadmissible", None)
            rows.append(row.to_csv())
    try:
        with open(args.out, "w", newline="") as handle:
            handle.write("\n".join(rows) + "\n")
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(rows) - 1} rows to {args.out}")
    return EXIT_OK


def _cmd_check(args) -> int:
    theorem = Theorem(args.theorem)
    w = WeightPair(args.alpha, args.beta)
    try:
        with open(args.function) as handle:
            record = json.load(handle)
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"parse error in function spec: {exc}", file=sys.stderr)
        return EXIT_PARSE

    f = record_to_function(record)  # ValueError -> parse exit; DomainError -> 2
    certificate = certify_bounded(f)
    if not certificate.certified:
        print(
            f"function not certified bounded: sup_estimate={_fmt(certificate.sup_estimate)}",
            file=sys.stderr,
        )
        return EXIT_UNCERTIFIED
    if not (0.0 <= args.r < 1.0):
        raise DomainError(f"r must lie in [0, 1), got {args.r}")

    # Evaluate at z = -r, the extremal direction for the reference family.
    breakdown = bohr_lhs(theorem, f, complex(-args.r), w)
    cert = radius(theorem, w)
    position = "below" if args.r < cert.value else ("above" if args.r > cert.value else "at")
    print(f"theorem={theorem.value} alpha={_fmt(w.alpha)} beta={_fmt(w.beta)} r={_fmt(args.r)}")
    print(f"modulus_term={_fmt(breakdown.modulus_term)}")
    print(f"constant_term={_fmt(breakdown.constant_term)}")
    print(f"series_term={_fmt(breakdown.series_term)}")
    print(f"area_term={_fmt(breakdown.area_term)}")
    print(f"truncation_slack={_fmt(breakdown.truncation_slack)}")
    print(f"total={_fmt(breakdown.total)}")
    satisfied = breakdown.total <= 1.0 + breakdown.truncation_slack
    print(f"bound=1 satisfied={'yes' if satisfied else 'no'}")
    print(f"radius={_fmt(cert.value)} position={position}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.seed)
    all_passed = True
    for report in reports:
        all_passed &= report.passed
        for line in report.to_lines():
            print(line)
    print(f"suite={args.suite} campaigns={len(reports)} passed={'yes' if all_passed else 'no'}")
    if args.witness_csv is not None:
        try:
            with open(args.witness_csv, "w", newline="") as handle:
                handle.write("\n".join(witnesses_to_csv_rows(reports)) + "\n")
        except OSError as exc:
            print(f"io error: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_OK if all_passed else EXIT_VERIFY


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ParseExit as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "radius":
            return _cmd_radius(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "check":
            return _cmd_check(args)
        return _cmd_verify(args)
    except (DomainError, PreconditionError, NotApplicableError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
