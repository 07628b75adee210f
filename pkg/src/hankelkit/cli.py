"""Command-line front end.

Every command writes one `hankel/v1` JSON document holding a `result` and the
`manifest` of the run, to `--out` or to stdout. Exit codes: 0 success,
1 verification failure, 2 input error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from .exceptions import ConfigurationError, NumericalError, ValidationError, VerificationError
from .measure import Measure
from .serialization import (
    RunManifest,
    coeffs_from_dict,
    document_body,
    dumps,
    intertwining_to_dict,
    measure_from_dict,
    measure_to_dict,
    moments_from_dict,
    moments_to_dict,
    profile_to_dict,
    read_document,
    report_to_dict,
    suite_to_dict,
    tails_to_dict,
    write_document,
)
from .toolkit import Toolkit
from .verification import STIELTJES_CHECKED_ORDER, STIELTJES_THETAS, SuiteResult

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

DEFAULT_MOMENT_COUNT = 16

Handler = Callable[[argparse.Namespace, Toolkit], tuple[dict[str, Any], list[str], SuiteResult | None]]


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        toolkit = Toolkit.from_config(
            getattr(args, "config", None),
            relative_tolerance=getattr(args, "tol", None),
            seed=getattr(args, "seed", None),
        )
        handler: Handler = args.handler
        result, inputs, suite = handler(args, toolkit)
        _emit(args, toolkit, result, inputs)
        if suite is not None:
            suite.check()
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (ValidationError, ConfigurationError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted before or after the command; SUPPRESS keeps a
    # subcommand from overwriting a value given earlier.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS, help="Quadrature relative tolerance.")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Seed for randomized trials.")
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON config file.")
    common.add_argument("--out", default=argparse.SUPPRESS, help="Write the result document here.")
    common.add_argument(
        "--log-space", action="store_true", default=argparse.SUPPRESS, help="Emit moments as (sign, log|q_n|)."
    )
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS, help="Debug logging.")

    parser = argparse.ArgumentParser(
        prog="hankelkit",
        description="Hankel quadratic forms, moment sequences and their measures.",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    moments = commands.add_parser("moments", parents=[common], help="Compute moments of a measure.")
    moments.add_argument("measure_file", nargs="?", help="Measure JSON document.")
    moments.add_argument("--family", help="Named family instead of a measure file.")
    moments.add_argument("--params", type=_json_object, default={}, help="Family parameters as a JSON object.")
    moments.add_argument("--count", type=int, default=DEFAULT_MOMENT_COUNT)
    moments.set_defaults(handler=cmd_moments)

    classify = commands.add_parser("classify", parents=[common], help="Classify a moment sequence.")
    classify.add_argument("moments_file")
    classify.add_argument("--orders", type=_int_list, default=None, help="Comma-separated section orders.")
    classify.add_argument("--measure", help="Family name or measure file for tail evidence.")
    classify.set_defaults(handler=cmd_classify)

    spectrum = commands.add_parser("spectrum", parents=[common], help="Finite-section norm profile.")
    spectrum.add_argument("moments_file")
    spectrum.add_argument("--orders", type=_int_list, default=None)
    spectrum.add_argument("--top-k", type=int, default=5, dest="top_k")
    spectrum.set_defaults(handler=cmd_spectrum)

    demo = commands.add_parser("stieltjes-demo", parents=[common], help="Moments of the Stieltjes family.")
    demo.add_argument("--thetas", type=_float_list, default=list(STIELTJES_THETAS))
    demo.add_argument("--count", type=int, default=STIELTJES_CHECKED_ORDER + 1)
    demo.set_defaults(handler=cmd_stieltjes_demo)

    verify = commands.add_parser("verify", parents=[common], help="Run a verification suite.")
    suites = verify.add_subparsers(dest="suite", required=True)

    form = suites.add_parser("form", parents=[common])
    form.add_argument("--measure", default="lebesgue01")
    form.add_argument("--K", type=int, default=16, dest="K")
    form.add_argument("--trials", type=int, default=100)

    intertwine = suites.add_parser("intertwine", parents=[common])
    intertwine.add_argument("--measure", default=None)
    intertwine.add_argument("--K", type=int, default=8, dest="K")
    intertwine.add_argument("--trials", type=int, default=10)
    intertwine.add_argument("--coeffs", default=None, help="CoeffVector JSON {\"g\": [...]} replacing random draws.")

    laguerre = suites.add_parser("laguerre", parents=[common])
    laguerre.add_argument("--max-n", type=int, default=20, dest="max_n")

    transport = suites.add_parser("transport", parents=[common])
    transport.add_argument("--measure", default=None)

    closure = suites.add_parser("closure", parents=[common])
    closure.add_argument("--measure", default=None)
    closure.add_argument("--ratio", type=float, default=0.9)

    unitarity = suites.add_parser("unitarity", parents=[common])
    unitarity.add_argument("--measure", default=None)

    for sub in (form, intertwine, laguerre, transport, closure, unitarity):
        sub.set_defaults(handler=cmd_verify)
    return parser


def cmd_moments(args: argparse.Namespace, toolkit: Toolkit) -> tuple[dict[str, Any], list[str], None]:
    if args.family:
        m = toolkit.family(args.family, **args.params)
        inputs = [f"family:{args.family}"]
    elif args.measure_file:
        m = measure_from_dict(read_document(args.measure_file))
        inputs = [args.measure_file]
    else:
        raise ValidationError.schema_mismatch("moments needs a measure file or --family")
    if getattr(args, "log_space", False):
        signs, logs = toolkit.log_moments(m, args.count)
        payload = moments_to_dict(None, signs=signs, log_values=logs, decay=m.decay)
    else:
        payload = moments_to_dict(toolkit.moments(m, args.count))
    payload["measure"] = measure_to_dict(m)
    return payload, inputs, None


def cmd_classify(args: argparse.Namespace, toolkit: Toolkit) -> tuple[dict[str, Any], list[str], None]:
    q = moments_from_dict(document_body(read_document(args.moments_file)))
    payload = report_to_dict(toolkit.classify(q, args.orders))
    inputs = [args.moments_file]
    if args.measure:
        payload["tails"] = tails_to_dict(toolkit.tails(_load_measure(args.measure, toolkit)))
        inputs.append(args.measure)
    return payload, inputs, None


def cmd_spectrum(args: argparse.Namespace, toolkit: Toolkit) -> tuple[dict[str, Any], list[str], None]:
    q = moments_from_dict(document_body(read_document(args.moments_file)))
    return profile_to_dict(toolkit.spectrum(q, args.orders, args.top_k)), [args.moments_file], None


def cmd_verify(args: argparse.Namespace, toolkit: Toolkit) -> tuple[dict[str, Any], list[str], SuiteResult]:
    params: dict[str, Any] = {}
    inputs: list[str] = []
    for name in ("K", "trials", "max_n", "ratio"):
        if hasattr(args, name):
            params[name] = getattr(args, name)
    if getattr(args, "measure", None):
        params["measure"] = _load_measure(args.measure, toolkit)
        inputs.append(args.measure)
    if args.suite in ("form", "intertwine"):
        params["seed"] = toolkit.settings.seed
    coeffs = getattr(args, "coeffs", None)
    if coeffs:
        params["coefficients"] = coeffs_from_dict(document_body(read_document(coeffs)))
        inputs.append(coeffs)
    result = toolkit.verify(args.suite, **params)
    if not result.passed:
        logger.warning("suite %s breached tolerance: worst case %s", result.name, result.worst_case)
    payload = suite_to_dict(result)
    if coeffs:
        report = toolkit.intertwining(params["coefficients"], params.get("measure"))
        payload["deviations"] = intertwining_to_dict(report)
    return payload, inputs, result


def cmd_stieltjes_demo(args: argparse.Namespace, toolkit: Toolkit) -> tuple[dict[str, Any], list[str], SuiteResult]:
    result = toolkit.stieltjes_demo(args.thetas, args.count)
    return suite_to_dict(result), [], result


def _emit(args: argparse.Namespace, toolkit: Toolkit, result: dict[str, Any], inputs: list[str]) -> None:
    out = getattr(args, "out", None)
    command = args.command if args.command != "verify" else f"verify {args.suite}"
    manifest = RunManifest.for_run(command, toolkit.settings, inputs=inputs, outputs=[out] if out else [])
    document = {"result": result, "manifest": manifest.to_dict()}
    if out:
        write_document(out, document)
    else:
        sys.stdout.write(dumps(document))


def _load_measure(value: str, toolkit: Toolkit) -> Measure:
    """A path to a measure document, or else a family name."""

    if Path(value).is_file():
        return measure_from_dict(read_document(value))
    return toolkit.family(value)


def _json_object(text: str) -> dict[str, Any]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"invalid JSON: {text}") from exc
    if not isinstance(value, dict):
        raise argparse.ArgumentTypeError("expected a JSON object")
    return value


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text}") from exc


def _float_list(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals: {text}") from exc


__all__ = [
    "EXIT_INPUT",
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_VERIFICATION",
    "build_parser",
    "main",
]
