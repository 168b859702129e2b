"""Executable form of the sign-change lemma behind Descartes' rule.

Multiplying a nonzero ``g`` by ``(1 - x)`` turns coefficients ``b_0..b_{n-1}``
into ``a_0..a_n`` with ``b_k = a_0 + ... + a_k`` and ``sum(a) == 0``.  The
claim is that ``SC(a) - SC(b)`` is positive and odd.  It is proved by
absorbing the head (``a_0 + a_1, a_2, ..., a_n`` satisfies the same system
against ``b_1..b_{n-1}``) and tracking two quantities per step::

    alpha = SC(a_0, a_1, ..., a_n) - SC(a_0 + a_1, a_2, ..., a_n)
    beta  = SC(b_0, b_1, ..., b_{n-1}) - SC(b_1, ..., b_{n-1})

Eight sign patterns of ``(a_0, a_1, b_1, a_p)`` (``p`` the least index > 1
with ``a_p != 0``) cover every case, and in each ``alpha - beta`` is 0 or 2.
This module replays that induction on concrete rationals and checks every
step against the table, raising :class:`CounterexampleError` with a full
trace if anything disagrees.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CaseError, CounterexampleError, PolynomialError, PreconditionError
from .poly import Polynomial, mul_linear, partial_sum_transform, scale_argument
from .scalar import ScalarLike, Sign, as_scalar, format_scalar, sign_of
from .signs import sc_literal, sc_poly, sc_scan


class Constraint(enum.Enum):
    POS = "+"
    ZERO = "0"
    NEG = "-"
    ANY = "X"
    FORCED_POS = "(+)"

    def admits(self, s: Sign) -> bool:
        if self is Constraint.ANY:
            return True
        if self in (Constraint.POS, Constraint.FORCED_POS):
            return s is Sign.POS
        if self is Constraint.ZERO:
            return s is Sign.ZERO
        return s is Sign.NEG


@dataclass(frozen=True)
class CasePattern:
    a0: Constraint
    a1: Constraint
    b1: Constraint
    ap: Constraint

    def matches(self, a0: Sign, a1: Sign, b1: Sign, ap: Sign) -> bool:
        return (
            self.a0.admits(a0)
            and self.a1.admits(a1)
            and self.b1.admits(b1)
            and self.ap.admits(ap)
        )


@dataclass(frozen=True)
class CaseRow:
    id: str
    pattern: CasePattern
    alpha: int
    beta: int


def _row(id, a0, a1, b1, ap, alpha, beta):
    C = Constraint
    return CaseRow(id, CasePattern(C(a0), C(a1), C(b1), C(ap)), alpha, beta)


# Row (ii) leaves a_0 free in the original table; it is pinned to "+" here so
# that a_0 = 0 belongs to row (i) alone and the rows are mutually exclusive.
CASE_TABLE: tuple[CaseRow, ...] = (
    _row("i", "0", "X", "X", "X", 0, 0),
    _row("ii", "+", "0", "X", "X", 0, 0),
    _row("iii", "+", "+", "(+)", "X", 0, 0),
    _row("iv", "+", "-", "0", "+", 2, 0),
    _row("v", "+", "-", "0", "-", 1, 1),
    _row("vi", "+", "-", "+", "+", 2, 0),
    _row("vii", "+", "-", "+", "-", 0, 0),
    _row("viii", "+", "-", "-", "X", 1, 1),
)

ROWS_BY_ID = {row.id: row for row in CASE_TABLE}


def _expected_b1(a0: Sign, a1: Sign) -> Optional[Sign]:
    """Sign of a_0 + a_1 when the summands' signs alone determine it."""
    if a0 is Sign.ZERO:
        return a1
    if a1 is Sign.ZERO or a0 is a1:
        return a0
    return None


def classify_case(a0: Sign, a1: Sign, b1: Sign, ap: Sign) -> CaseRow:
    """Return the unique table row matching the normalized sign pattern."""
    a0, a1, b1, ap = Sign(a0), Sign(a1), Sign(b1), Sign(ap)
    if ap is Sign.ZERO:
        raise CaseError("a_p must be nonzero")
    if a0 is Sign.NEG:
        raise CaseError("pattern not normalized: negate the whole system so a_0 >= 0")
    expected = _expected_b1(a0, a1)
    if expected is not None and b1 is not expected:
        raise CaseError(
            f"inconsistent signs: a_0={a0.symbol}, a_1={a1.symbol} force "
            f"b_1={expected.symbol}, got {b1.symbol}"
        )
    hits = [row for row in CASE_TABLE if row.pattern.matches(a0, a1, b1, ap)]
    if len(hits) != 1:
        raise CaseError(
            f"pattern ({a0.symbol}, {a1.symbol}, {b1.symbol}, {ap.symbol}) "
            f"matches {len(hits)} rows"
        )
    return hits[0]


# -- induction replay --------------------------------------------------------


@dataclass(frozen=True)
class CaseContext:
    p: int
    q: Optional[int]


@dataclass(frozen=True)
class InductionStep:
    """One level of the induction.  ``row`` is ``"base"`` at n = 1."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    negated: bool
    row: str
    alpha: Optional[int]
    beta: Optional[int]
    delta: int
    context: Optional[CaseContext] = None

    def to_text(self) -> str:
        a = _fmt_seq(self.a)
        b = _fmt_seq(self.b)
        neg = " (negated)" if self.negated else ""
        if self.row == "base":
            return f"a={a} b={b} row=base delta={self.delta}"
        return (
            f"a={a} b={b} row={self.row}{neg} alpha={self.alpha} "
            f"beta={self.beta} delta={self.delta}"
        )

    def to_json(self) -> dict:
        return {
            "a": [format_scalar(x) for x in self.a],
            "b": [format_scalar(x) for x in self.b],
            "negated": self.negated,
            "row": self.row,
            "alpha": self.alpha,
            "beta": self.beta,
            "delta": self.delta,
        }


@dataclass(frozen=True)
class InductionTrace:
    steps: tuple[InductionStep, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_text(self) -> str:
        return "\n".join(step.to_text() for step in self.steps)

    def to_json(self) -> list[dict]:
        return [step.to_json() for step in self.steps]


def _fmt_seq(xs) -> str:
    return "[" + ", ".join(format_scalar(x) for x in xs) + "]"


def _scalars(a: Sequence[ScalarLike]) -> list[Fraction]:
    return [as_scalar(x) for x in a]


def _check_system(a: list[Fraction], min_len: int) -> list[Fraction]:
    if len(a) < min_len:
        raise PreconditionError(f"need at least {min_len} coefficients, got {len(a)}")
    return partial_sum_transform(a)


def _context(a: Sequence[Fraction], b: Sequence[Fraction]) -> CaseContext:
    p = next(i for i in range(2, len(a)) if a[i] != 0)
    q = next((i for i in range(2, len(b)) if b[i] != 0), None)
    return CaseContext(p, q)


def _classify_step(a: list[Fraction], b: list[Fraction]):
    """Normalize signs and classify one induction level (len(a) >= 3)."""
    negated = a[0] < 0
    if negated:
        a = [-x for x in a]
        b = [-x for x in b]
    ctx = _context(a, b)
    row = classify_case(sign_of(a[0]), sign_of(a[1]), sign_of(b[1]), sign_of(a[ctx.p]))
    return negated, ctx, row


def alpha_beta(a: Sequence[ScalarLike]) -> tuple[int, int]:
    """Compute (alpha, beta) for the head-absorption step on ``a``.

    ``a`` must have length >= 3, a nonzero last entry and zero sum.  Both
    quantities are invariant under negating the whole system, so the sign
    normalization used for table lookup does not change them.
    """
    a = _scalars(a)
    b = _check_system(a, 3)
    alpha = sc_scan(a) - sc_scan([a[0] + a[1]] + a[2:])
    beta = sc_scan(b) - sc_scan(b[1:])
    return alpha, beta


def _fail(message: str, a, b, steps) -> CounterexampleError:
    lines = [f"input a={_fmt_seq(a)}", f"input b={_fmt_seq(b)}"]
    lines += [step.to_text() for step in steps]
    return CounterexampleError(message, "\n".join(lines))


def verify_lemma_step(a: Sequence[ScalarLike]) -> tuple[int, InductionTrace]:
    """Check that ``SC(a) - SC(b)`` is positive and odd, where ``a = (1 - x) * b``.

    Replays the induction down to n = 1, matching each level against the case
    table.  Returns the difference and the trace; any disagreement raises
    :class:`CounterexampleError` carrying the trace so far.
    """
    a = _scalars(a)
    b = _check_system(a, 2)

    levels = []
    cur_a, cur_b = a, b
    while True:
        levels.append((cur_a, cur_b, sc_scan(cur_a), sc_scan(cur_b)))
        if len(cur_a) == 2:
            break
        cur_a = [cur_a[0] + cur_a[1]] + cur_a[2:]
        cur_b = cur_b[1:]

    steps: list[InductionStep] = []
    for k, (la, lb, sa, sb) in enumerate(levels):
        delta = sa - sb
        if len(la) == 2:
            steps.append(InductionStep(tuple(la), tuple(lb), False, "base", None, None, delta))
            if delta != 1:
                raise _fail(f"base case gave SC difference {delta}, expected 1", a, b, steps)
            continue
        na, nb, sna, snb = levels[k + 1]
        alpha, beta = sa - sna, sb - snb
        try:
            negated, ctx, row = _classify_step(la, lb)
        except CaseError as exc:
            raise _fail(f"no table row: {exc}", a, b, steps) from exc
        steps.append(
            InductionStep(tuple(la), tuple(lb), negated, row.id, alpha, beta, delta, ctx)
        )
        if (alpha, beta) != (row.alpha, row.beta):
            raise _fail(
                f"row {row.id} predicts (alpha, beta) = ({row.alpha}, {row.beta}), "
                f"computed ({alpha}, {beta})",
                a, b, steps,
            )
        if lb[1] == 0 and (ctx.q != ctx.p or lb[ctx.q] != la[ctx.p]):
            raise _fail("b_1 = 0 but q != p or b_q != a_p", a, b, steps)

    delta = steps[0].delta
    telescoped = 1 + sum(s.alpha - s.beta for s in steps if s.row != "base")
    trace = InductionTrace(tuple(steps))
    if delta != telescoped:
        raise _fail(f"delta {delta} != 1 + sum(alpha - beta) = {telescoped}", a, b, steps)
    if delta < 1 or delta % 2 != 1:
        raise _fail(f"SC(a) - SC(b) = {delta} is not positive and odd", a, b, steps)
    return delta, trace


@dataclass(frozen=True)
class LemmaResult:
    g: Polynomial
    c: Fraction
    m: int
    f: Polynomial
    sc_f: int
    sc_g: int
    excess: int
    # one (delta, trace) per factor (1 - x), applied to g(c*x)
    factors: tuple[tuple[int, InductionTrace], ...]

    def to_text(self, trace: bool = False) -> str:
        lines = [str(self.excess)]
        if trace:
            lines.append(f"f = {self.f.to_text()}")
            lines.append(f"SC(f) = {self.sc_f}, SC(g) = {self.sc_g}, m = {self.m}")
            for k, (delta, tr) in enumerate(self.factors, 1):
                lines.append(f"factor {k}: delta={delta}")
                lines.extend("  " + line for line in tr.to_text().splitlines())
        return "\n".join(lines)

    def to_json(self, trace: bool = False) -> dict:
        out = {
            "g": self.g.to_json(),
            "c": format_scalar(self.c),
            "m": self.m,
            "f": self.f.to_json(),
            "sc_f": self.sc_f,
            "sc_g": self.sc_g,
            "excess": self.excess,
        }
        if trace:
            out["factors"] = [
                {"delta": delta, "trace": tr.to_json()} for delta, tr in self.factors
            ]
        return out


def lemma_chain(g, c: ScalarLike, m: int) -> LemmaResult:
    """Check ``SC((c - x)**m * g) - SC(g) - m`` is even and non-negative.

    ``f`` is built directly with ``c``.  Independently, ``g(c*x)`` is
    multiplied by ``(1 - x)`` ``m`` times and each factor is replayed through
    :func:`verify_lemma_step`; the per-factor deltas must sum to
    ``SC(f) - SC(g)``.
    """
    g = g if isinstance(g, Polynomial) else Polynomial(g)
    c = as_scalar(c)
    if g.is_zero():
        raise PolynomialError("g must be nonzero")
    if c <= 0:
        raise PreconditionError(f"c must be positive, got {format_scalar(c)}")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise PreconditionError(f"m must be a positive integer, got {m!r}")

    f = g
    for _ in range(m):
        f = mul_linear(f, c)
    sc_f, sc_g = sc_poly(f), sc_poly(g)

    h = scale_argument(g, c)
    factors = []
    for _ in range(m):
        h = mul_linear(h, 1)
        factors.append(verify_lemma_step(h.coeffs))
    total = sum(delta for delta, _ in factors)
    excess = sc_f - sc_g - m
    result = LemmaResult(g, c, m, f, sc_f, sc_g, excess, tuple(factors))
    if total != sc_f - sc_g:
        raise CounterexampleError(
            f"factor deltas sum to {total} but SC(f) - SC(g) = {sc_f - sc_g}",
            result.to_text(trace=True),
        )
    if excess < 0 or excess % 2:
        raise CounterexampleError(
            f"SC(f) - SC(g) - m = {excess} is not even and non-negative",
            result.to_text(trace=True),
        )
    return result


def verify_lemma(g, c: ScalarLike, m: int) -> int:
    return lemma_chain(g, c, m).excess


def verify_theorem(f, known_pz: int) -> int:
    """Return ``SC(f) - known_pz`` after checking it is even and non-negative."""
    f = f if isinstance(f, Polynomial) else Polynomial(f)
    if f.is_zero():
        raise PolynomialError("the rule of signs needs a nonzero polynomial")
    if isinstance(known_pz, bool) or not isinstance(known_pz, int) or known_pz < 0:
        raise PreconditionError(f"known_pz must be a non-negative integer, got {known_pz!r}")
    defect = sc_poly(f) - known_pz
    if defect < 0 or defect % 2:
        raise CounterexampleError(
            f"SC(f) - PZ(f) = {defect} is not even and non-negative",
            f"f={f.to_text()} SC={sc_poly(f)} PZ={known_pz}",
        )
    return defect


# -- exhaustive table check --------------------------------------------------

WITNESS_VALUES = (-2, -1, 1, 2)
WITNESS_GAPS = (2, 3, 4)


@dataclass(frozen=True)
class TableMismatch:
    a: tuple[Fraction, ...]
    row: Optional[str]
    computed: tuple[int, int]
    reason: str

    def to_text(self) -> str:
        return f"a={_fmt_seq(self.a)} row={self.row} computed={self.computed}: {self.reason}"


@dataclass
class TableReport:
    witnesses: int = 0
    observed: dict = field(default_factory=dict)  # row id -> set of (alpha, beta)
    counts: dict = field(default_factory=dict)  # row id -> witness count
    mismatches: list = field(default_factory=list)

    @property
    def rows_covered(self) -> int:
        return len(self.counts)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.rows_covered == len(CASE_TABLE)

    def summary(self) -> str:
        return f"{self.rows_covered} rows, {len(self.mismatches)} mismatches"

    def to_text(self) -> str:
        lines = [self.summary(), f"witnesses: {self.witnesses}"]
        for row in CASE_TABLE:
            seen = sorted(self.observed.get(row.id, ()))
            lines.append(
                f"row {row.id}: table ({row.alpha}, {row.beta}), "
                f"witnesses {self.counts.get(row.id, 0)}, observed "
                + (", ".join(f"({x}, {y})" for x, y in seen) or "none")
            )
        lines.extend(m.to_text() for m in self.mismatches)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "rows": self.rows_covered,
            "mismatches": len(self.mismatches),
            "witnesses": self.witnesses,
            "table": [
                {
                    "row": row.id,
                    "alpha": row.alpha,
                    "beta": row.beta,
                    "witnesses": self.counts.get(row.id, 0),
                    "observed": [list(p) for p in sorted(self.observed.get(row.id, ()))],
                }
                for row in CASE_TABLE
            ],
            "failures": [m.to_text() for m in self.mismatches],
        }


def _tails(s: Fraction):
    """Tails after a_p that restore a zero total with a nonzero last entry."""
    if s == 0:
        return [(), (1, -1), (0, -1, 1)]
    return [(-s,), (0, -s), (s, -2 * s)]


def table_witnesses():
    """Concrete sequences covering every sign combination of (a_0, a_1, a_p)."""
    heads = (0,) + WITNESS_VALUES
    for a0, a1, ap, gap in itertools.product(heads, heads, WITNESS_VALUES, WITNESS_GAPS):
        head = [a0, a1] + [0] * (gap - 2) + [ap]
        for tail in _tails(Fraction(a0 + a1 + ap)):
            yield [Fraction(x) for x in head + list(tail)]


def exhaustive_table_check() -> TableReport:
    """Compute (alpha, beta) directly on every witness and compare with the table."""
    report = TableReport()
    for a in table_witnesses():
        report.witnesses += 1
        alpha, beta = alpha_beta(a)
        b = partial_sum_transform(a)
        try:
            _, ctx, row = _classify_step(a, b)
        except CaseError as exc:
            report.mismatches.append(TableMismatch(tuple(a), None, (alpha, beta), str(exc)))
            continue
        report.counts[row.id] = report.counts.get(row.id, 0) + 1
        report.observed.setdefault(row.id, set()).add((alpha, beta))
        if (alpha, beta) != (row.alpha, row.beta):
            report.mismatches.append(
                TableMismatch(tuple(a), row.id, (alpha, beta), "table disagrees")
            )
        elif alpha - beta not in (0, 2):
            report.mismatches.append(
                TableMismatch(tuple(a), row.id, (alpha, beta), "alpha - beta not in {0, 2}")
            )
        # the literal counter must see the same thing as the scan
        na = [-x for x in a] if a[0] < 0 else a
        if sc_literal(na) - sc_literal([na[0] + na[1]] + na[2:]) != alpha:
            report.mismatches.append(
                TableMismatch(tuple(a), row.id, (alpha, beta), "literal SC disagrees on alpha")
            )
    return report
