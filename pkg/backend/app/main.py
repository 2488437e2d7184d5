"""Command-line entry point for xopenergy.

Every subcommand prints a JSON report on stdout and optionally writes it to
``--out``. Exit codes: 0 on success, 2 when a scan classification is
inconclusive, 1 on errors.
"""

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


def _add_target_arguments(parser: argparse.ArgumentParser, default_partition: str = "1,1,1,1",
                          default_n: int = 8) -> None:
    parser.add_argument(
        "--partition",
        default=default_partition,
        help=f"Double partition as comma-separated integers; empty for the classical family (default: {default_partition})"
    )
    parser.add_argument(
        "--n",
        type=int,
        default=default_n,
        help=f"Degree of the polynomial (default: {default_n})"
    )
    parser.add_argument(
        "--family",
        default="hermite",
        choices=["hermite", "laguerre", "jacobi"],
        help="Classical family used when the partition is empty (default: hermite)"
    )
    parser.add_argument("--alpha", default="0", help="Laguerre/Jacobi parameter alpha (exact rational)")
    parser.add_argument("--beta", default="0", help="Jacobi parameter beta (exact rational)")


def _add_scan_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--window", type=float, default=None, help="Half-width of the real scan segment")
    parser.add_argument("--radius", type=float, default=None, help="Radius of the complex scan circle")
    parser.add_argument("--real-samples", type=int, default=None, help="Samples on the real segment")
    parser.add_argument("--circle-samples", type=int, default=None, help="Samples on the circle")
    parser.add_argument("--epsilon", type=float, default=None, help="Classification margin on log f")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xopenergy",
        description="Exceptional Hermite zeros as critical points of a weighted energy"
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=None,
        choices=[53, 256],
        help="Working precision in bits (default: PRECISION_BITS from the configuration)"
    )
    parser.add_argument("--out", type=Path, default=None, help="Write the JSON report to this file")
    parser.add_argument("--csv", type=Path, default=None, help="Write the scan grid to this CSV file")
    parser.add_argument("--config", type=Path, default=None, help="YAML file with configuration overrides")

    sub = parser.add_subparsers(dest="command", required=True)

    build_cmd = sub.add_parser("build", help="Construct eta and the exceptional polynomial")
    _add_target_arguments(build_cmd)

    roots_cmd = sub.add_parser("roots", help="Compute and classify the zeros")
    _add_target_arguments(roots_cmd)
    roots_cmd.add_argument("--proximity-degrees", default="",
                           help="Comma-separated degrees for the eta-proximity trend")

    stieltjes_cmd = sub.add_parser("stieltjes-check", help="Compare direct sums with ODE predictions")
    _add_target_arguments(stieltjes_cmd)
    stieltjes_cmd.add_argument("--m", default="1,2,3", help="Comma-separated powers (default: 1,2,3)")
    stieltjes_cmd.add_argument("--method", default="recurrence", choices=["recurrence", "closed_form"])

    energy_cmd = sub.add_parser("energy-check", help="Gradient, Hessian and definiteness at the zeros")
    _add_target_arguments(energy_cmd)

    conditions_cmd = sub.add_parser("conditions", help="Sufficient conditions for a maximum at the zeros")
    _add_target_arguments(conditions_cmd)

    scan_cmd = sub.add_parser("scan", help="Translation scan of f(z) around z = 0")
    _add_target_arguments(scan_cmd)
    _add_scan_arguments(scan_cmd)
    scan_cmd.add_argument("--stability", action="store_true", help="Repeat at doubled grid density")

    examples_cmd = sub.add_parser("reproduce-examples", help="Run the three reference partitions end to end")
    _add_scan_arguments(examples_cmd)

    maximize_cmd = sub.add_parser("maximize", help="Multistart maximisation of log|T|^2")
    _add_target_arguments(maximize_cmd, default_partition="", default_n=3)
    maximize_cmd.add_argument("--starts", type=int, default=None, help="Number of random starts")
    maximize_cmd.add_argument("--seed", type=int, default=None, help="Random seed")
    maximize_cmd.add_argument("--tol", type=float, default=1e-6, help="Distance counted as a hit")
    maximize_cmd.add_argument("--spread", type=float, default=None,
                              help="Start within this distance of the zero configuration instead of the box")
    return parser


def _int_list(text: str) -> List[int]:
    return [int(token) for token in text.split(",") if token.strip()]


def _fraction(text: str) -> Fraction:
    from backend.app.core.errors import ParameterRangeError

    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterRangeError(f"not an exact rational: {text!r}") from exc


def _target(args) -> Tuple[Any, Any, Any]:
    """Polynomial, its zero set and the matching weight."""
    from backend.app.energy.weights import WeightSpec
    from backend.app.polycore.classical import classical_poly
    from backend.app.polycore.exceptional import exceptional_hermite
    from backend.app.polycore.partitions import Partition
    from backend.app.roots.zeros import compute_zero_set

    partition = Partition.parse(args.partition)
    alpha, beta = _fraction(args.alpha), _fraction(args.beta)
    if partition.is_empty:
        poly = classical_poly(args.family, args.n, alpha, beta)
        weight = WeightSpec.classical(args.family, alpha, beta)
    else:
        poly = exceptional_hermite(partition, args.n)
        weight = WeightSpec.exceptional_hermite(partition)
    zero_set = compute_zero_set(poly, precision=args.precision) if poly.degree > 0 else None
    return poly, zero_set, weight


def _scan_spec(args):
    from backend.app.explorer.scan import ScanSpec

    overrides = {
        "window": args.window,
        "radius": args.radius,
        "real_samples": args.real_samples,
        "circle_samples": args.circle_samples,
        "epsilon": args.epsilon,
    }
    return ScanSpec(**{k: v for k, v in overrides.items() if v is not None})


def cmd_build(args) -> Tuple[Dict, int]:
    from backend.app.polycore.exceptional import eta_hermite, fit_ode_constant
    from backend.app.polycore.partitions import Partition
    from backend.app.core.numeric import fraction_to_string

    poly, _, weight = _target(args)
    partition = Partition.parse(args.partition)
    payload = {
        "partition": str(partition),
        "degree": poly.degree,
        "polynomial": poly.to_json(),
        "weight": weight.describe(),
    }
    if not partition.is_empty:
        eta = eta_hermite(partition)
        payload["eta"] = eta.to_json()
        payload["ode_constant"] = fraction_to_string(fit_ode_constant(poly, eta))
    return payload, EXIT_OK


def cmd_roots(args) -> Tuple[Dict, int]:
    from backend.app.core.numeric import to_decimal
    from backend.app.polycore.partitions import Partition
    from backend.app.roots.proximity import eta_proximity, proximity_trend

    _, zero_set, _ = _target(args)
    partition = Partition.parse(args.partition)
    ctx = zero_set.context
    payload = {"zeros": zero_set.to_json()}
    if not partition.is_empty:
        payload["eta_proximity"] = [
            to_decimal(ctx, entry.distance) for entry in eta_proximity(partition, args.n, args.precision)
        ]
        degrees = _int_list(args.proximity_degrees)
        if degrees:
            trend = proximity_trend(partition, degrees, args.precision)
            payload["proximity_trend"] = {
                "degrees": list(trend.degrees),
                "max_distances": [to_decimal(ctx, d) for d in trend.max_distances],
                "decreasing": trend.decreasing,
            }
    return payload, EXIT_OK


def _ode(args):
    from backend.app.polycore.partitions import Partition
    from backend.app.stieltjes.ode import classical_ode, exceptional_hermite_ode

    partition = Partition.parse(args.partition)
    if partition.is_empty:
        return classical_ode(args.family, args.n, _fraction(args.alpha), _fraction(args.beta))
    return exceptional_hermite_ode(partition, args.n)


def cmd_stieltjes(args) -> Tuple[Dict, int]:
    from backend.app.stieltjes.relations import check_relation

    _, zero_set, _ = _target(args)
    ode = _ode(args)
    reports = [
        check_relation(zero_set.expanded(), m, ode, precision=args.precision, method=args.method)
        for m in _int_list(args.m)
    ]
    return {"relations": reports}, EXIT_OK


def cmd_energy(args) -> Tuple[Dict, int]:
    from backend.app.energy.functional import Configuration, log_abs_T_sq, log_abs_T_sq_expanded
    from backend.app.energy.report import analyze_critical_point
    from backend.app.energy.verification import check_gradient, check_hessian

    _, zero_set, weight = _target(args)
    report = analyze_critical_point(zero_set, weight)
    configuration = Configuration.from_zero_set(zero_set)
    direct = log_abs_T_sq(configuration, weight)
    expanded = log_abs_T_sq_expanded(configuration, weight)
    payload = {
        "critical_point": report,
        "fd_gradient_relative_error": check_gradient(configuration, weight).relative_error,
        "fd_hessian_relative_error": check_hessian(configuration, weight).relative_error,
        "log_abs_T_sq_agreement": float(abs(direct - expanded) / max(abs(direct), 1)),
    }
    return payload, EXIT_OK


def cmd_conditions(args) -> Tuple[Dict, int]:
    from backend.app.energy.conditions import check_sufficient_conditions

    _, zero_set, weight = _target(args)
    pearson = weight.pearson_residual(precision=args.precision)
    payload = {
        "weight": weight.describe(),
        "pearson_residual": pearson.max_residual,
        "pearson_holds": pearson.holds,
        "conditions": check_sufficient_conditions(weight, zero_set),
    }
    return payload, EXIT_OK


def cmd_scan(args) -> Tuple[Dict, int]:
    from backend.app.explorer.export import write_scan_csv
    from backend.app.explorer.scan import ScanClass, classify_scan, scan_f, scan_stability

    _, zero_set, weight = _target(args)
    spec = _scan_spec(args)
    result = scan_f(zero_set, weight, spec)
    label = classify_scan(result)
    payload = {
        "spec": spec,
        "classification": label,
        "samples": len(result.samples),
        "skipped": len(result.skipped),
        "real_max_log_f": max((s.log_f for s in result.real_samples if s.z != 0), default=None),
        "circle_range": [
            min((s.log_f for s in result.circle_samples), default=None),
            max((s.log_f for s in result.circle_samples), default=None),
        ],
    }
    if args.stability:
        stability = scan_stability(zero_set, weight, spec)
        payload["stable_under_refinement"] = stability.stable
        payload["refined_classification"] = stability.fine
    if args.csv:
        write_scan_csv(result, args.csv)
    return payload, EXIT_INCONCLUSIVE if label is ScanClass.INCONCLUSIVE else EXIT_OK


def cmd_examples(args) -> Tuple[Dict, int]:
    from backend.app.explorer.examples import reproduce_examples
    from backend.app.explorer.scan import ScanClass

    reports = reproduce_examples(args.precision, _scan_spec(args))
    inconclusive = any(r.scan_class is ScanClass.INCONCLUSIVE for r in reports)
    return {"examples": reports}, EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


def cmd_maximize(args) -> Tuple[Dict, int]:
    from backend.app.energy.functional import Configuration
    from backend.app.explorer.optimize import multistart_maximize

    _, zero_set, weight = _target(args)
    configuration = Configuration.from_zero_set(zero_set)
    reference = [float(y) for y in configuration.y]
    mu = [float(m) for m in configuration.mu]
    result = multistart_maximize(
        weight, configuration.n, mu, starts=args.starts, seed=args.seed, reference=reference,
        spread=args.spread,
    )
    payload = {
        "result": result,
        "zero_configuration": reference,
        "hit_fraction": result.hit_fraction(reference, args.tol),
    }
    return payload, EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "roots": cmd_roots,
    "stieltjes-check": cmd_stieltjes,
    "energy-check": cmd_energy,
    "conditions": cmd_conditions,
    "scan": cmd_scan,
    "reproduce-examples": cmd_examples,
    "maximize": cmd_maximize,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point for xopenergy."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.config is not None:
        from backend.app.core.config import CONFIG_ENV_VAR, get_config

        os.environ[CONFIG_ENV_VAR] = str(args.config)
        get_config.cache_clear()

    from backend.app.core.enhanced_logger import get_enhanced_logger
    from backend.app.core.errors import XopEnergyError
    from backend.app.explorer.export import dumps, write_json

    logger = get_enhanced_logger()
    with logger.correlation_context() as correlation_id:
        logger.log_run_parameters(args.command, vars(args))
        try:
            payload, code = COMMANDS[args.command](args)
        except (XopEnergyError, ValueError) as e:
            logger.error(f"{args.command} failed: {e} [correlation_id: {correlation_id}]")
            return EXIT_ERROR

        payload = {"command": args.command, "correlation_id": correlation_id, **payload}
        print(dumps(payload))
        if args.out:
            write_json(payload, args.out)
        return code


if __name__ == "__main__":
    sys.exit(main())
