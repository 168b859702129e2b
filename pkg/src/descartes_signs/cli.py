"""Command-line front end.

Coefficients are given constant term first (``6 -11 6 -1`` is
``6 - 11x + 6x^2 - x^3``); ``--descending`` flips that.  A single ``-``
reads the coefficient list from stdin.

Exit codes: 0 success, 1 property violation (counterexample printed),
2 usage or parse error, 3 isolation could not be resolved within the depth
limit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .errors import CounterexampleError, PreconditionError, UnresolvedIntervalError
from .fuzz import DEFAULT_COEFF_BOUND, run_fuzz
from .isolation import DEFAULT_MAX_DEPTH, isolate_positive
from .lemma import exhaustive_table_check, lemma_chain
from .poly import Polynomial
from .scalar import parse_scalar
from .signs import sc_poly

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_UNRESOLVED = 3

_SCALAR_ITEM = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_COEFFS = {"type": "array", "items": _SCALAR_ITEM}

# Output schemas for --json, one per verb.
JSON_SCHEMAS = {
    "sc": {
        "type": "object",
        "required": ["coefficients", "sc"],
        "properties": {"coefficients": _COEFFS, "sc": {"type": "integer", "minimum": 0}},
        "additionalProperties": False,
    },
    "bound": {
        "type": "object",
        "required": ["coefficients", "sc", "parity", "possible_pz"],
        "properties": {
            "coefficients": _COEFFS,
            "sc": {"type": "integer", "minimum": 0},
            "parity": {"enum": ["even", "odd"]},
            "possible_pz": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "additionalProperties": False,
    },
    "isolate": {
        "type": "object",
        "required": ["coefficients", "roots", "pz"],
        "properties": {
            "coefficients": _COEFFS,
            "pz": {"type": "integer", "minimum": 0},
            "roots": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["lo", "hi", "kind", "multiplicity"],
                    "properties": {
                        "lo": _SCALAR_ITEM,
                        "hi": _SCALAR_ITEM,
                        "kind": {"enum": ["exact", "open"]},
                        "multiplicity": {"type": "integer", "minimum": 1},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "pz": {
        "type": "object",
        "required": ["coefficients", "pz"],
        "properties": {"coefficients": _COEFFS, "pz": {"type": "integer", "minimum": 0}},
        "additionalProperties": False,
    },
    "lemma-verify": {
        "type": "object",
        "required": ["g", "c", "m", "f", "sc_f", "sc_g", "excess"],
        "properties": {
            "g": _COEFFS,
            "c": _SCALAR_ITEM,
            "m": {"type": "integer", "minimum": 1},
            "f": _COEFFS,
            "sc_f": {"type": "integer", "minimum": 0},
            "sc_g": {"type": "integer", "minimum": 0},
            "excess": {"type": "integer"},
            "factors": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["delta", "trace"],
                    "properties": {
                        "delta": {"type": "integer"},
                        "trace": {
                            "type": "array",
                            "items": {
                                "type": "object",
                                "required": ["a", "b", "negated", "row", "alpha", "beta", "delta"],
                                "properties": {
                                    "a": _COEFFS,
                                    "b": _COEFFS,
                                    "negated": {"type": "boolean"},
                                    "row": {"enum": ["base", "i", "ii", "iii", "iv",
                                                     "v", "vi", "vii", "viii"]},
                                    "alpha": {"type": ["integer", "null"]},
                                    "beta": {"type": ["integer", "null"]},
                                    "delta": {"type": "integer"},
                                },
                            },
                        },
                    },
                },
            },
        },
        "additionalProperties": False,
    },
    "table-check": {
        "type": "object",
        "required": ["rows", "mismatches", "witnesses", "table", "failures"],
        "properties": {
            "rows": {"type": "integer"},
            "mismatches": {"type": "integer"},
            "witnesses": {"type": "integer"},
            "table": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["row", "alpha", "beta", "witnesses", "observed"],
                    "properties": {
                        "row": {"type": "string"},
                        "alpha": {"type": "integer"},
                        "beta": {"type": "integer"},
                        "witnesses": {"type": "integer"},
                        "observed": {
                            "type": "array",
                            "items": {"type": "array", "items": {"type": "integer"},
                                      "minItems": 2, "maxItems": 2},
                        },
                    },
                },
            },
            "failures": {"type": "array", "items": {"type": "string"}},
        },
        "additionalProperties": False,
    },
    "fuzz": {
        "type": "object",
        "required": ["trials", "seed", "max_degree", "coeff_bound", "checks",
                     "violations", "failed_trial", "counterexample"],
        "properties": {
            "trials": {"type": "integer", "minimum": 0},
            "seed": {"type": "integer"},
            "max_degree": {"type": "integer", "minimum": 0},
            "coeff_bound": {"type": "integer", "minimum": 1},
            "checks": {"type": "integer", "minimum": 0},
            "violations": {"type": "integer", "minimum": 0},
            "failed_trial": {"type": ["integer", "null"]},
            "counterexample": {"type": ["string", "null"]},
        },
        "additionalProperties": False,
    },
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Treats ``-3/4`` like ``-3``: a negative number, not an option."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise UsageError(message)


def _coefficients(tokens: Sequence[str], descending: bool, stdin) -> Polynomial:
    if list(tokens) == ["-"]:
        tokens = stdin.read().split()
    tokens = list(tokens)
    if descending:
        tokens.reverse()
    values = []
    for tok in tokens:
        try:
            values.append(parse_scalar(tok))
        except PreconditionError:
            raise UsageError(f"cannot parse coefficient {tok!r}") from None
    return Polynomial(values)


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")

    with_coeffs = _Parser(add_help=False, parents=[common])
    with_coeffs.add_argument("--descending", action="store_true",
                             help="coefficients are given leading term first")
    with_coeffs.add_argument("coeffs", nargs="*", metavar="COEFF",
                             help="rational coefficients, constant term first; '-' reads stdin")

    parser = _Parser(prog="descartes-signs", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", metavar="VERB", required=True)

    sub.add_parser("sc", parents=[with_coeffs], help="count sign changes")
    sub.add_parser("bound", parents=[with_coeffs],
                   help="sign changes as a bound on the positive-root count")
    iso = sub.add_parser("isolate", parents=[with_coeffs], help="isolate positive roots")
    iso.add_argument("--max-depth", type=_non_negative_int, default=DEFAULT_MAX_DEPTH)
    sub.add_parser("pz", parents=[with_coeffs],
                   help="count positive roots with multiplicity")

    lem = sub.add_parser("lemma-verify", parents=[with_coeffs],
                         help="check SC((c-x)^m g) - SC(g) - m is even and >= 0")
    lem.add_argument("--c", required=True, help="positive rational c")
    lem.add_argument("--m", required=True, type=_non_negative_int, help="multiplicity m >= 1")
    lem.add_argument("--trace", action="store_true", help="print the induction trace")

    tab = sub.add_parser("table-check", parents=[common],
                         help="recompute (alpha, beta) for every case-table sign pattern")
    tab.add_argument("--verbose", action="store_true", help="print per-row details")

    fz = sub.add_parser("fuzz", parents=[common], help="randomized lemma/theorem checks")
    fz.add_argument("--trials", type=_non_negative_int, default=1000)
    fz.add_argument("--seed", type=int, default=0)
    fz.add_argument("--max-degree", type=_non_negative_int, default=8)
    fz.add_argument("--coeff-bound", type=_non_negative_int, default=DEFAULT_COEFF_BOUND)
    return parser


def _emit(out, args, text: str, payload: dict) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _nonzero(f: Polynomial) -> Polynomial:
    if f.is_zero():
        raise PreconditionError("polynomial must be nonzero")
    return f


def _dispatch(args, out, stdin) -> int:
    verb = args.verb
    if verb == "table-check":
        report = exhaustive_table_check()
        text = report.to_text() if args.verbose else report.summary()
        _emit(out, args, text, report.to_json())
        return EXIT_OK if report.ok else EXIT_VIOLATION
    if verb == "fuzz":
        if args.coeff_bound < 1:
            raise PreconditionError("--coeff-bound must be at least 1")
        report = run_fuzz(args.trials, args.seed, args.max_degree, args.coeff_bound)
        _emit(out, args, report.to_text(), report.to_json())
        return EXIT_OK if report.ok else EXIT_VIOLATION

    f = _coefficients(args.coeffs, args.descending, stdin)
    coeffs = f.to_json()
    if verb == "sc":
        n = sc_poly(f)
        _emit(out, args, str(n), {"coefficients": coeffs, "sc": n})
    elif verb == "bound":
        n = sc_poly(_nonzero(f))
        parity = "odd" if n % 2 else "even"
        possible = list(range(n, -1, -2))
        text = (f"{n}\nparity: {parity}; positive roots with multiplicity: "
                + ", ".join(map(str, possible)))
        _emit(out, args, text,
              {"coefficients": coeffs, "sc": n, "parity": parity, "possible_pz": possible})
    elif verb in ("isolate", "pz"):
        f = _nonzero(f)
        if f.degree == 0:
            iso_roots, total, text = [], 0, "no positive roots"
        else:
            depth = getattr(args, "max_depth", DEFAULT_MAX_DEPTH)
            iso = isolate_positive(f, max_depth=depth)
            iso_roots, total, text = iso.to_json()["roots"], iso.pz, iso.to_text()
        if verb == "pz":
            _emit(out, args, str(total), {"coefficients": coeffs, "pz": total})
        else:
            _emit(out, args, text, {"coefficients": coeffs, "roots": iso_roots, "pz": total})
    elif verb == "lemma-verify":
        try:
            c = parse_scalar(args.c)
        except PreconditionError:
            raise UsageError(f"cannot parse --c value {args.c!r}") from None
        result = lemma_chain(f, c, args.m)
        _emit(out, args, result.to_text(args.trace), result.to_json(args.trace))
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, out=None, err=None, stdin=None) -> int:
    """Execute one command; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        return _dispatch(args, out, stdin)
    except UsageError as exc:
        err.write(f"descartes-signs: error: {exc}\n")
        return EXIT_USAGE
    except PreconditionError as exc:
        err.write(f"descartes-signs: error: {exc}\n")
        return EXIT_USAGE
    except CounterexampleError as exc:
        out.write(f"counterexample: {exc}\n")
        return EXIT_VIOLATION
    except UnresolvedIntervalError as exc:
        err.write(f"descartes-signs: unresolved: {exc}\n")
        return EXIT_UNRESOLVED
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
