"""Random instance generators and the randomized verification loop.

All generators take an explicit :class:`random.Random`.  The fuzz loop derives
one generator per trial from ``"{seed}:{trial}"`` so a failing trial can be
replayed on its own and the output never depends on scheduling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CounterexampleError
from .isolation import pz
from .lemma import lemma_chain, verify_lemma_step, verify_theorem
from .poly import Polynomial, from_roots
from .scalar import format_scalar
from .signs import sc_poly

DEFAULT_COEFF_BOUND = 10


def random_scalar(rng: random.Random, bound: int = DEFAULT_COEFF_BOUND, zero_prob: float = 0.0) -> Fraction:
    if zero_prob and rng.random() < zero_prob:
        return Fraction(0)
    while True:
        num = rng.randint(-bound, bound)
        if num or zero_prob:
            return Fraction(num, rng.randint(1, bound))


def random_positive(rng: random.Random, bound: int = DEFAULT_COEFF_BOUND) -> Fraction:
    """A rational in [1/bound, bound] with numerator and denominator at most ``bound``."""
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_sequence(rng: random.Random, max_len: int = 13, bound: int = DEFAULT_COEFF_BOUND) -> list[Fraction]:
    """Rational sequence of length 0..max_len, about a third zeros."""
    n = rng.randint(0, max_len)
    return [random_scalar(rng, bound, zero_prob=0.35) for _ in range(n)]


def random_poly(rng: random.Random, max_degree: int = 8, bound: int = DEFAULT_COEFF_BOUND,
                min_degree: int = 0) -> Polynomial:
    """Nonzero polynomial with degree in [min_degree, max_degree]."""
    deg = rng.randint(min_degree, max_degree)
    cs = [random_scalar(rng, bound, zero_prob=0.25) for _ in range(deg)]
    cs.append(random_scalar(rng, bound))
    return Polynomial(cs)


def random_step_sequence(rng: random.Random, max_degree: int = 12, bound: int = DEFAULT_COEFF_BOUND) -> list[Fraction]:
    """``a_0..a_n`` with n >= 1, zero sum and ``a_n != 0``, drawn directly."""
    while True:
        n = rng.randint(1, max_degree)
        head = [random_scalar(rng, bound, zero_prob=0.3) for _ in range(n)]
        last = -sum(head)
        if last != 0:
            return head + [last]


def random_lemma_case(rng: random.Random, max_degree: int = 8, bound: int = DEFAULT_COEFF_BOUND,
                      max_m: int = 4):
    g = random_poly(rng, max_degree, bound)
    return g, random_positive(rng, bound), rng.randint(1, max_m)


def random_positive_poly(rng: random.Random, max_degree: int = 3, bound: int = DEFAULT_COEFF_BOUND) -> Polynomial:
    deg = rng.randint(0, max_degree)
    return Polynomial(random_positive(rng, bound) for _ in range(deg + 1))


def random_root_construction(rng: random.Random, max_total: int = 6, bound: int = DEFAULT_COEFF_BOUND,
                             cofactor_degree: int = 3):
    """``(f, roots, expected_pz)`` for ``f = prod (c_j - x)**m_j * q``.

    ``q`` has strictly positive coefficients, so it has no positive root and
    the expected count is exactly the sum of the ``m_j``.
    """
    total = rng.randint(0, max_total)
    roots = []
    left = total
    while left:
        m = rng.randint(1, left)
        roots.append((random_positive(rng, bound), m))
        left -= m
    q = random_positive_poly(rng, cofactor_degree, bound)
    return from_roots(roots, q), roots, total


def random_odd_sc_poly(rng: random.Random, max_degree: int = 8, bound: int = DEFAULT_COEFF_BOUND) -> Polynomial:
    while True:
        f = random_poly(rng, max_degree, bound, min_degree=1)
        if sc_poly(f) % 2 == 1:
            return f


@dataclass
class FuzzReport:
    trials: int
    seed: int
    max_degree: int
    coeff_bound: int
    checks: int = 0
    failure: Optional[str] = None
    failed_trial: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def to_text(self) -> str:
        line = (
            f"trials: {self.trials}, seed: {self.seed}, max-degree: {self.max_degree}, "
            f"checks: {self.checks}, violations: {0 if self.ok else 1}"
        )
        if self.ok:
            return line
        return "\n".join([line, f"counterexample in trial {self.failed_trial}:", self.failure])

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "max_degree": self.max_degree,
            "coeff_bound": self.coeff_bound,
            "checks": self.checks,
            "violations": 0 if self.ok else 1,
            "failed_trial": self.failed_trial,
            "counterexample": self.failure,
        }


def fuzz_trial(rng: random.Random, max_degree: int, bound: int) -> int:
    """Run one lemma, one single-factor and one theorem check; return check count."""
    g, c, m = random_lemma_case(rng, max_degree, bound)
    lemma_chain(g, c, m)

    verify_lemma_step(random_step_sequence(rng, max_degree + 1, bound))

    f, roots, expected = random_root_construction(rng, bound=bound)
    got = pz(f)
    if got != expected:
        desc = ", ".join(f"({format_scalar(r)}, {k})" for r, k in roots)
        raise CounterexampleError(
            f"pz(f) = {got}, constructed with {expected} positive roots",
            f"f={f.to_text()} roots={desc}",
        )
    verify_theorem(f, got)
    return 3


def run_fuzz(trials: int, seed: int, max_degree: int = 8, coeff_bound: int = DEFAULT_COEFF_BOUND) -> FuzzReport:
    report = FuzzReport(trials, seed, max_degree, coeff_bound)
    for k in range(trials):
        rng = random.Random(f"{seed}:{k}")
        try:
            report.checks += fuzz_trial(rng, max_degree, coeff_bound)
        except CounterexampleError as exc:
            report.failure = str(exc)
            report.failed_trial = k
            break
    return report
