#!/usr/bin/env python3
"""
slicecalc

Slice-regular calculus on octonions and quaternions: evaluate, multiply and
construct functions, count zeros, and run the seeded verification suites.

Exit codes: 0 success / all cases passed, 1 verification failure or math
error, 2 usage or parse error.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from models.pipeline_models import SuiteConfig
from models.series_models import SliceSeries
from models.octonion import UnitImaginary
from models.zero_models import ContourSpec
from pipeline.orchestrator import VerificationOrchestrator, report_payload
from services.series import evaluate, rational_star, rational_reciprocal, construct
from services.series.calculus import reciprocal_series
from services.zeros import contour_count
from utils.config import config
from utils.constants import (
    ALG_TOL, SERIES_TOL, SAMPLE_TOL, DEFAULT_DEGREE, DEFAULT_SAMPLES, DEFAULT_CONTOUR_NODES,
    SUITE_NAMES, ALL_SUITES
)
from utils.exceptions import SliceCalcError, ParseError, UnknownSuite, BadParameter, ConfigurationError
from utils.json_io import FunctionFileIO, canonical_dumps, parse_point
from utils.logging_config import setup_logging
from utils.report_formatter import ReportFormatter
from utils.seeding import case_rng

logger = setup_logging(logger_name=__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

USAGE_ERRORS = (ParseError, UnknownSuite, BadParameter, ConfigurationError)


def _emit(payload: Any, out: Optional[str] = None):
    """Print canonical JSON, or write it to a file when --out is given"""
    text = canonical_dumps(payload)
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text + "\n")
        logger.info(f"Wrote {out}")
    else:
        print(text)


def _parse_params(pairs: List[str]) -> Dict[str, Any]:
    """key=value pairs; values are read as JSON when possible, else kept as strings"""
    params = {}
    for pair in pairs or []:
        key, sep, raw = pair.partition('=')
        if not sep or not key:
            raise ParseError(f"Parameter must look like key=value: '{pair}'")
        try:
            params[key] = json.loads(raw)
        except json.JSONDecodeError:
            params[key] = raw
    return params


def _add_run_options(parser: argparse.ArgumentParser):
    parser.add_argument("--seed", type=int, default=None,
                        help="64-bit seed (default: SLICECALC_SEED or 42)")
    parser.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="Series truncation degree")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="Samples per check")
    parser.add_argument("--tol-alg", type=float, default=ALG_TOL, help="Closed-form tolerance")
    parser.add_argument("--tol-series", type=float, default=SERIES_TOL, help="Series identity tolerance")
    parser.add_argument("--tol-sample", type=float, default=SAMPLE_TOL, help="Sampled estimate tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicecalc",
        description="Slice-regular calculus on octonions and quaternions with seeded verification suites."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log progress (INFO)")
    parser.add_argument("--debug", action="store_true", help="Log per-case details (DEBUG)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", help="Evaluate a function file at a point")
    eval_parser.add_argument("file", help="Series or rational JSON file")
    eval_parser.add_argument("point", help="8 reals, as a JSON array or comma separated")

    star_parser = subparsers.add_parser("star", help="Regular product of two function files")
    star_parser.add_argument("left")
    star_parser.add_argument("right")
    star_parser.add_argument("--out", help="Write the result to this file")

    recip_parser = subparsers.add_parser("recip", help="Regular reciprocal of a function file")
    recip_parser.add_argument("file")
    recip_parser.add_argument("--degree", type=int, default=None,
                              help="Taylor expansion degree (series input only); exact rational otherwise")
    recip_parser.add_argument("--out", help="Write the result to this file")

    construct_parser = subparsers.add_parser("construct", help="Build a named family member")
    construct_parser.add_argument("family", help="extremal, mobius, koebe, monomial_rotation, twisted_fixed_point (example_3_3), "
                                                 "minda, herzig, blaschke, affine, polynomial")
    construct_parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                                  help="Family parameter; octonions as JSON arrays of 8 reals")
    construct_parser.add_argument("--out", help="Write the result to this file")

    verify_parser = subparsers.add_parser("verify", help="Run verification suites")
    _add_run_options(verify_parser)
    verify_parser.add_argument("--suite", action="append", default=None,
                               help=f"Suite to run, repeatable: {', '.join(SUITE_NAMES)} or {ALL_SUITES}")
    verify_parser.add_argument("--workers", type=int, default=None,
                               help="Worker threads for suite cases (default: SLICECALC_WORKERS or 1)")
    verify_parser.add_argument("--json", action="store_true", help="Print the JSON report")
    verify_parser.add_argument("--timing", action="store_true", help="Include runtime_ms in the report")
    verify_parser.add_argument("--out", help="Also write the JSON report to this file")

    zeros_parser = subparsers.add_parser(
        "zeros", help="Count zeros of f^s in a symmetric neighbourhood (a spherical zero of f counts 2)"
    )
    zeros_parser.add_argument("file", help="Series or rational JSON file")
    zeros_parser.add_argument("--x0", type=float, default=0.0, help="Real part of the sphere center")
    zeros_parser.add_argument("--y0", type=float, default=0.0, help="Radius of the sphere center")
    zeros_parser.add_argument("--delta", type=float, required=True, help="Contour radius")
    zeros_parser.add_argument("--unit", default="e1", help="Slice unit: e1..e7 or 8 reals")
    zeros_parser.add_argument("--nodes", type=int, default=DEFAULT_CONTOUR_NODES, help="Trapezoid nodes")
    zeros_parser.add_argument("--seed", type=int, default=None, help="Seed for the second slice")

    report_parser = subparsers.add_parser("report", help="Render a saved JSON report as a table")
    report_parser.add_argument("file")
    report_parser.add_argument("--csv", help="Export the case table as CSV")

    return parser


def _seed(args: argparse.Namespace) -> int:
    return args.seed if args.seed is not None else config.get_seed()


def _parse_unit(text: str) -> UnitImaginary:
    stripped = text.strip()
    if stripped.startswith('e') and stripped[1:].isdigit():
        return UnitImaginary.basis(int(stripped[1:]))
    return UnitImaginary(parse_point(stripped))


def cmd_eval(args: argparse.Namespace) -> int:
    function = FunctionFileIO.load_function(args.file)
    value = evaluate(function, parse_point(args.point))
    print(json.dumps(value.to_list()))
    return EXIT_OK


def cmd_star(args: argparse.Namespace) -> int:
    product = rational_star(FunctionFileIO.load_function(args.left), FunctionFileIO.load_function(args.right))
    _emit(product.to_dict(), args.out)
    return EXIT_OK


def cmd_recip(args: argparse.Namespace) -> int:
    function = FunctionFileIO.load_function(args.file)
    if args.degree is not None:
        if not isinstance(function, SliceSeries):
            raise ParseError("--degree expects a series file", context={'file': args.file})
        result = reciprocal_series(function, args.degree)
    else:
        result = rational_reciprocal(function)
    _emit(result.to_dict(), args.out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    function = construct(args.family, **_parse_params(args.param))
    _emit(function.to_dict(), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suite_config = SuiteConfig(
        seed=_seed(args),
        degree=args.degree,
        samples=args.samples,
        tol_alg=args.tol_alg,
        tol_series=args.tol_series,
        tol_sample=args.tol_sample,
        suites=args.suite or [ALL_SUITES],
        workers=args.workers if args.workers is not None else config.get_workers(),
        timing=args.timing
    )
    batch = VerificationOrchestrator(suite_config).run()
    payload = report_payload(batch, include_timing=args.timing)
    if args.out:
        _emit(payload, args.out)
    if args.json:
        _emit(payload)
    else:
        print(ReportFormatter.format_table(payload))
    return EXIT_OK if batch.passed else EXIT_FAILURE


def cmd_zeros(args: argparse.Namespace) -> int:
    function = FunctionFileIO.load_function(args.file)
    spec = ContourSpec(x0=args.x0, y0=args.y0, delta=args.delta, I=_parse_unit(args.unit), M=args.nodes)
    result = contour_count(function, spec, case_rng(_seed(args), "zeros-cli", 0))
    _emit({'spec': spec.to_dict(), 'result': result.to_dict(), 'convention': 'zeros of f^s'})
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    data = FunctionFileIO.load_json(args.file)
    print(ReportFormatter.format_table(data))
    if args.csv:
        ReportFormatter.export_csv(data, args.csv)
        logger.info(f"Exported {args.csv}")
    return EXIT_OK if data.get('pass', False) else EXIT_FAILURE


COMMANDS = {
    "eval": cmd_eval,
    "star": cmd_star,
    "recip": cmd_recip,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "zeros": cmd_zeros,
    "report": cmd_report,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Command line interface for slicecalc"""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        level = "DEBUG" if args.debug else "INFO" if args.verbose else config.get_log_level()
        setup_logging(level=level, log_file=config.get_log_file(), force=True)
        return COMMANDS[args.command](args)

    except USAGE_ERRORS as e:
        logger.error(f"Usage error: {e}")
        return EXIT_USAGE
    except SliceCalcError as e:
        logger.error(f"Computation error: {e}")
        return EXIT_FAILURE
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_FAILURE
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
