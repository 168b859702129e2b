"""Exact Descartes' rule of signs.

Sign-change counting, the (c - x) sign-change lemma as executable checks,
and certified isolation of positive real roots, all over exact rationals.
"""

from .errors import (
    CaseError,
    CounterexampleError,
    PolynomialError,
    PreconditionError,
    ScalarError,
    UnresolvedIntervalError,
)
from .isolation import (
    Isolation,
    RootInterval,
    isolate_positive,
    pz,
    squarefree_part,
    transform_count,
)
from .lemma import (
    CASE_TABLE,
    alpha_beta,
    classify_case,
    exhaustive_table_check,
    verify_lemma,
    verify_lemma_step,
    verify_theorem,
)
from .poly import (
    Polynomial,
    cauchy_bound,
    derivative,
    div_linear,
    evaluate,
    gcd,
    mul_linear,
    partial_sum_transform,
    scale_argument,
)
from .scalar import Sign, compare, make_scalar, parse_scalar, sign_of
from .signs import sc_literal, sc_poly, sc_scan

__all__ = [
    "CASE_TABLE",
    "CaseError",
    "CounterexampleError",
    "Isolation",
    "Polynomial",
    "PolynomialError",
    "PreconditionError",
    "RootInterval",
    "ScalarError",
    "Sign",
    "UnresolvedIntervalError",
    "alpha_beta",
    "cauchy_bound",
    "classify_case",
    "compare",
    "derivative",
    "div_linear",
    "evaluate",
    "exhaustive_table_check",
    "gcd",
    "isolate_positive",
    "make_scalar",
    "mul_linear",
    "parse_scalar",
    "partial_sum_transform",
    "pz",
    "sc_literal",
    "sc_poly",
    "sc_scan",
    "scale_argument",
    "sign_of",
    "squarefree_part",
    "transform_count",
    "verify_lemma",
    "verify_lemma_step",
    "verify_theorem",
]

__version__ = "0.1.0"
