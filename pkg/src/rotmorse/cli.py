"""Command-line interface: critical-point census, polynomial comparison,
cross-check suites, and gradient-flow batches, all with reproducible seeds.

JSON is the machine format and is byte-stable for fixed flags and seed on a
fixed platform; tables are for humans and carry no stability promise.

Exit codes: 0 success (and perfect, for `polynomials`), 2 argument
validation, 3 perfectness check failed, 4 a numeric suite failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .critical import default_costs, enumerate_critical_points, validate_costs
from .riemannian import FlowConfig, gradient_flow
from .rotations import MEMBERSHIP_TOL, haar_sample, is_rotation
from .topology import is_perfect
from .verify import run_all_suites


class CliInputError(Exception):
    """Input problems detected after argument parsing (e.g. a bad start file)."""


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by all subcommands."""

    n: int
    c: np.ndarray
    seed: int
    tol: float
    samples: int
    format: str
    out: str | None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotmorse",
        description=(
            "Critical points, Morse and Poincare polynomials, and Riemannian "
            "gradient flow for weighted-trace objectives on SO(n)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="matrix dimension (n >= 1)")
        p.add_argument(
            "--c",
            default="default",
            help="comma-separated strictly increasing weights; 'default' means 1,2,...,n",
        )
        p.add_argument("--seed", type=int, default=0, help="rng seed for anything sampled")
        p.add_argument("--samples", type=int, default=100, help="number of random samples")
        p.add_argument("--tol", type=float, default=1e-8, help="gradient-norm tolerance")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--out", default=None, help="write output to this path instead of stdout")

    p_crit = sub.add_parser("critical-points", help="enumerate the critical set")
    add_common(p_crit)

    p_poly = sub.add_parser("polynomials", help="Morse vs Poincare polynomials and verdict")
    add_common(p_poly)

    p_verify = sub.add_parser("verify", help="run the numeric cross-check suites")
    add_common(p_verify)

    p_flow = sub.add_parser("flow", help="gradient descents from Haar starts")
    add_common(p_flow)
    p_flow.add_argument(
        "--start",
        default=None,
        help="JSON file with one start matrix (row-major); runs a single descent from it",
    )

    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    if args.n < 1:
        parser.error("n must be >= 1")
    if args.c == "default":
        c = default_costs(args.n)
    else:
        try:
            values = [float(x) for x in args.c.split(",")]
        except ValueError:
            parser.error(f"could not parse --c {args.c!r} as comma-separated reals")
        try:
            c = validate_costs(values, n=args.n)
        except ValueError as exc:
            parser.error(str(exc))
    if args.samples < 1:
        parser.error("samples must be >= 1")
    if args.tol <= 0:
        parser.error("tol must be positive")
    return RunConfig(
        n=args.n,
        c=c,
        seed=args.seed,
        tol=args.tol,
        samples=args.samples,
        format=args.format,
        out=args.out,
    )


def _emit(text: str, config: RunConfig) -> None:
    if config.out:
        Path(config.out).write_text(text + "\n")
    else:
        print(text)


def _pattern_key(eps) -> str:
    return "".join("+" if e > 0 else "-" for e in eps)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_critical_points(config: RunConfig) -> int:
    records = sorted(
        enumerate_critical_points(config.n, config.c), key=lambda r: (r.index, r.value)
    )
    if config.format == "json":
        payload = {
            "n": config.n,
            "c": config.c.tolist(),
            "critical_points": [r.to_json_dict() for r in records],
        }
        text = json.dumps(payload, indent=2)
    elif config.format == "csv":
        rows = [
            (r.index, repr(r.value), _pattern_key(r.pattern),
             ";".join(repr(h) for h in r.hessian_diagonal.tolist()))
            for r in records
        ]
        text = _csv_text(("index", "value", "eps", "hessian_diagonal"), rows)
    else:
        lines = [f"critical points of f_c on SO({config.n}), c = {config.c.tolist()}"]
        lines.append(f"{'index':>5}  {'value':>12}  pattern")
        for r in records:
            lines.append(f"{r.index:>5}  {r.value:>12.6g}  {_pattern_key(r.pattern)}")
        lines.append(f"total: {len(records)} critical points")
        text = "\n".join(lines)
    _emit(text, config)
    return 0


def cmd_polynomials(config: RunConfig) -> int:
    report = is_perfect(config.n, config.c)
    verdict = "PERFECT" if report.perfect else "NOT PERFECT"
    if config.format == "json":
        payload = {
            "n": config.n,
            "c": config.c.tolist(),
            "morse": report.morse.to_list(),
            "poincare_basis": report.poincare_basis.to_list(),
            "poincare_product": report.poincare_product.to_list(),
            "remainder": None if report.remainder is None else report.remainder.to_list(),
            "perfect": report.perfect,
            "verdict": verdict,
        }
        text = json.dumps(payload, indent=2)
    elif config.format == "csv":
        rows = [
            ("morse", str(report.morse)),
            ("poincare_basis", str(report.poincare_basis)),
            ("poincare_product", str(report.poincare_product)),
            ("remainder", "infeasible" if report.remainder is None else str(report.remainder)),
            ("verdict", verdict),
        ]
        text = _csv_text(("quantity", "value"), rows)
    else:
        remainder = "infeasible" if report.remainder is None else str(report.remainder)
        text = "\n".join(
            [
                f"n = {config.n}, c = {config.c.tolist()}",
                f"Morse polynomial:                   {report.morse}",
                f"Poincare polynomial (Z2, basis):    {report.poincare_basis}",
                f"Poincare polynomial (Z2, product):  {report.poincare_product}",
                f"Morse-inequality remainder R(t):    {remainder}",
                f"verdict: {verdict}",
            ]
        )
    _emit(text, config)
    return 0 if report.perfect else 3


def cmd_verify(config: RunConfig) -> int:
    suites = run_all_suites(
        config.n, config.samples, seed=config.seed, c=config.c, grad_tol=config.tol
    )
    all_passed = all(s.passed for s in suites)
    if config.format == "json":
        payload = {
            "n": config.n,
            "c": config.c.tolist(),
            "seed": config.seed,
            "samples": config.samples,
            "suites": [s.to_json_dict() for s in suites],
            "passed": all_passed,
        }
        text = json.dumps(payload, indent=2)
    elif config.format == "csv":
        rows = [
            (s.name, "pass" if s.passed else "fail", repr(s.max_residual), repr(s.threshold))
            for s in suites
        ]
        text = _csv_text(("suite", "status", "max_residual", "threshold"), rows)
    else:
        lines = []
        for s in suites:
            status = "PASS" if s.passed else "FAIL"
            detail = f"  ({s.detail})" if s.detail else ""
            lines.append(
                f"[{status}] {s.name:<20} max residual {s.max_residual:.3e} "
                f"vs threshold {s.threshold:.3e}{detail}"
            )
        lines.append("all suites passed" if all_passed else "one or more suites FAILED")
        text = "\n".join(lines)
    _emit(text, config)
    return 0 if all_passed else 4


def _load_start_matrix(path: str, n: int) -> np.ndarray:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliInputError(f"could not read start file {path!r}: {exc}") from exc
    A = np.asarray(data, dtype=float)
    if A.shape != (n, n):
        raise CliInputError(f"start matrix has shape {A.shape}, expected ({n}, {n})")
    if not is_rotation(A, MEMBERSHIP_TOL):
        raise CliInputError("start matrix is not a rotation matrix within membership tolerance")
    return A


def cmd_flow(config: RunConfig, start: str | None = None) -> int:
    flow_config = FlowConfig(grad_tol=config.tol)
    if start is not None:
        starts = [_load_start_matrix(start, config.n)]
    else:
        rng = np.random.default_rng(config.seed)
        starts = [haar_sample(config.n, rng) for _ in range(config.samples)]

    results = [gradient_flow(A0, config.c, flow_config) for A0 in starts]

    pattern_counts: dict = {}
    unclassified = 0
    for r in results:
        if r.classified_pattern is None:
            unclassified += 1
        else:
            key = _pattern_key(r.classified_pattern)
            pattern_counts[key] = pattern_counts.get(key, 0) + 1
    iteration_counts = [r.iterations for r in results]
    summary = {
        "samples": len(results),
        "converged": sum(r.converged for r in results),
        "unclassified": unclassified,
        "pattern_counts": dict(sorted(pattern_counts.items())),
        "max_final_gradient_norm": max(r.final_gradient_norm for r in results),
        "iterations": {
            "min": min(iteration_counts),
            "mean": sum(iteration_counts) / len(iteration_counts),
            "max": max(iteration_counts),
        },
    }

    if config.format == "json":
        payload = {
            "n": config.n,
            "c": config.c.tolist(),
            "seed": config.seed,
            "tol": config.tol,
            "samples": [r.to_json_dict() for r in results],
            "summary": summary,
        }
        text = json.dumps(payload, indent=2)
    elif config.format == "csv":
        rows = [
            (
                i,
                r.iterations,
                repr(r.final_gradient_norm),
                r.converged,
                "unclassified" if r.classified_pattern is None else _pattern_key(r.classified_pattern),
            )
            for i, r in enumerate(results)
        ]
        text = _csv_text(
            ("sample", "iterations", "final_gradient_norm", "converged", "pattern"), rows
        )
    else:
        lines = [
            f"gradient flow on SO({config.n}), c = {config.c.tolist()}, "
            f"seed {config.seed}, {summary['samples']} start(s)",
            f"converged: {summary['converged']}/{summary['samples']} "
            f"(worst final gradient norm {summary['max_final_gradient_norm']:.3e})",
            f"iterations: min {summary['iterations']['min']}, "
            f"mean {summary['iterations']['mean']:.1f}, max {summary['iterations']['max']}",
            "limits per sign pattern:",
        ]
        for key, count in summary["pattern_counts"].items():
            lines.append(f"  {key}  {count}")
        if unclassified:
            lines.append(f"  unclassified  {unclassified}")
        text = "\n".join(lines)
    _emit(text, config)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(parser, args)
    try:
        if args.command == "critical-points":
            return cmd_critical_points(config)
        if args.command == "polynomials":
            return cmd_polynomials(config)
        if args.command == "verify":
            return cmd_verify(config)
        if args.command == "flow":
            return cmd_flow(config, start=args.start)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
