from __future__ import annotations

import argparse
from typing import Tuple


def divisor_vector(text: str) -> Tuple[int, ...]:
    """Parse "3,0,0" into (3, 0, 0)."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], help="Report format (default: json)")
    common.add_argument("--budget", type=positive_int, help="Groebner reduction budget per certificate")
    common.add_argument("--seed", type=int, help="Seed for randomized checks")
    common.add_argument("--method", choices=["chart", "rabinowitsch"], help="Quasi-smoothness test")
    common.add_argument(
        "--unsafe-skip-checks",
        action="store_true",
        help="Skip ampleness and certificate checks; results are marked uncertified",
    )
    common.add_argument("--config", type=str, help="User settings JSON file")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging on stderr")
    common.add_argument("--log-file", type=str, help="Write JSON-lines logs to this file")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="torica",
        description="Toric varieties in homogeneous coordinates: fans, class groups and Hodge numbers of hypersurfaces",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Indices are 0-based in JSON reports and 1-based in tables.

Exit codes: 0 success, 1 mathematical precondition failed,
            2 input error, 3 Groebner budget exhausted.

Examples:
  # Validate a fan
  torica fan check p2.json

  # Hodge numbers of the Fermat quintic
  torica hodge p4.json quintic.json --b 5,0,0,0,0

  # Per-cone quasi-smoothness table
  torica certify quasismooth p2.json cubic.json --format table
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="command")

    fan = commands.add_parser("fan", help="Fan validation and combinatorics")
    fan_actions = fan.add_subparsers(dest="action", required=True, metavar="action")
    for action, text in (
        ("check", "Validate the fan axioms"),
        ("classgroup", "Class group, ray degrees and anticanonical class"),
        ("collections", "Primitive collections, components of Z and codim Z"),
    ):
        sub = fan_actions.add_parser(action, parents=[common], help=text)
        sub.add_argument("fan", help="Fan JSON file")

    divisor = commands.add_parser("divisor", help="Torus-invariant divisors")
    divisor_actions = divisor.add_subparsers(dest="action", required=True, metavar="action")
    info = divisor_actions.add_parser("info", parents=[common], help="Cartier/ample flags and support polytope")
    info.add_argument("fan", help="Fan JSON file")
    info.add_argument("--b", type=divisor_vector, required=True, help="Divisor coefficients, e.g. 3,0,0")

    hodge = commands.add_parser("hodge", parents=[common], help="Full Hodge report of a hypersurface")
    hodge.add_argument("fan", help="Fan JSON file")
    hodge.add_argument("poly", help="Polynomial JSON file")
    hodge.add_argument("--b", type=divisor_vector, help="Divisor of class deg f (default: from the polynomial file)")

    moduli = commands.add_parser("moduli", parents=[common], help="Moduli tangent dimension and dim Aut")
    moduli.add_argument("fan", help="Fan JSON file")
    moduli.add_argument("poly", help="Polynomial JSON file")

    certify = commands.add_parser("certify", help="Per-cone or per-face certificates")
    certify_actions = certify.add_subparsers(dest="action", required=True, metavar="action")
    for action, text in (
        ("quasismooth", "Quasi-smoothness, one Groebner check per maximal cone"),
        ("nondegenerate", "Nondegeneracy, one Groebner check per polytope face"),
    ):
        sub = certify_actions.add_parser(action, parents=[common], help=text)
        sub.add_argument("fan", help="Fan JSON file")
        sub.add_argument("poly", help="Polynomial JSON file")
        sub.add_argument("--b", type=divisor_vector, help="Divisor of class deg f")

    forms = commands.add_parser("forms", help="Exterior-form identities")
    forms_actions = forms.add_subparsers(dest="action", required=True, metavar="action")
    verify = forms_actions.add_parser("verify", parents=[common], help="Run the form identity suite")
    verify.add_argument("fan", help="Fan JSON file")
    verify.add_argument("poly", nargs="?", help="Optional polynomial JSON file")

    return parser
