"""Isolating and counting positive real roots with Descartes' rule.

For an interval ``(lo, hi)`` the substitution ``x = (lo + hi*t) / (1 + t)``
maps ``t in (0, inf)`` onto ``x in (lo, hi)``.  Clearing the denominator
``(1 + t)**n`` gives a polynomial whose sign changes bound the number of roots
of ``f`` in the interval, with the difference even.  So a count of 0 proves
the interval empty and a count of 1 proves exactly one root.  Bisecting from
``(0, cauchy_bound)`` until every piece counts 0 or 1 isolates the positive
roots of the squarefree part; multiplicities come from a squarefree
decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import PolynomialError, PreconditionError, UnresolvedIntervalError
from .poly import (
    Polynomial,
    cauchy_bound,
    derivative,
    div_linear,
    evaluate,
    gcd,
    poly_divmod,
)
from .scalar import ScalarLike, as_scalar, format_scalar
from .signs import sc_poly

EXACT = "exact"
OPEN = "open"

DEFAULT_MAX_DEPTH = 128


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction
    kind: str
    multiplicity: int = 1

    def __post_init__(self):
        if self.kind == EXACT and self.lo != self.hi:
            raise ValueError("exact root needs lo == hi")
        if self.kind == OPEN and not (0 <= self.lo < self.hi):
            raise ValueError("open interval needs 0 <= lo < hi")

    def to_text(self) -> str:
        if self.kind == EXACT:
            where = format_scalar(self.lo)
        else:
            where = f"({format_scalar(self.lo)}, {format_scalar(self.hi)})"
        return f"{self.kind} {where} multiplicity {self.multiplicity}"

    def to_json(self) -> dict:
        return {
            "lo": format_scalar(self.lo),
            "hi": format_scalar(self.hi),
            "kind": self.kind,
            "multiplicity": self.multiplicity,
        }


@dataclass(frozen=True)
class Isolation:
    roots: tuple[RootInterval, ...] = ()

    @property
    def intervals(self) -> tuple[RootInterval, ...]:
        return self.roots

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(r.multiplicity for r in self.roots)

    @property
    def pz(self) -> int:
        return sum(self.multiplicities)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def to_text(self) -> str:
        if not self.roots:
            return "no positive roots"
        return "\n".join(r.to_text() for r in self.roots)

    def to_json(self) -> dict:
        return {"roots": [r.to_json() for r in self.roots], "pz": self.pz}


def _poly(f) -> Polynomial:
    return f if isinstance(f, Polynomial) else Polynomial(f)


def interval_transform(f, lo: ScalarLike, hi: ScalarLike) -> Polynomial:
    """``(1 + t)**n * f((lo + hi*t) / (1 + t))`` as a polynomial in ``t``."""
    f = _poly(f)
    lo, hi = as_scalar(lo), as_scalar(hi)
    n = f.degree
    if n < 0:
        return f
    lin = Polynomial([lo, hi])
    one_plus_t = [Polynomial([1])]
    for _ in range(n):
        one_plus_t.append(one_plus_t[-1] * Polynomial([1, 1]))
    # Horner in the numerator: r <- r*(lo + hi t) + a_i (1 + t)^(n - i)
    acc = Polynomial([f.coeffs[n]])
    for i in range(n - 1, -1, -1):
        acc = acc * lin + one_plus_t[n - i] * f.coeffs[i]
    return acc


def transform_count(f, lo: ScalarLike, hi: ScalarLike) -> int:
    """Descartes bound on the number of roots of ``f`` in the open interval (lo, hi)."""
    f = _poly(f)
    lo, hi = as_scalar(lo), as_scalar(hi)
    if f.is_zero():
        raise PolynomialError("transform_count needs a nonzero polynomial")
    if not (0 <= lo < hi):
        raise PreconditionError(
            f"need 0 <= lo < hi, got ({format_scalar(lo)}, {format_scalar(hi)})"
        )
    return sc_poly(interval_transform(f, lo, hi))


def squarefree_part(f) -> Polynomial:
    """Monic ``f / gcd(f, f')``: the distinct roots of ``f``, each simple."""
    f = _poly(f)
    if f.degree < 1:
        raise PolynomialError("squarefree_part needs degree >= 1")
    return poly_divmod(f, gcd(f, derivative(f)))[0].monic()


def squarefree_decomposition(f) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic ``(s_k, k)`` with ``f = lc * prod s_k**k``.

    Each ``s_k`` is squarefree, the ``s_k`` are pairwise coprime, and the
    roots of ``s_k`` are exactly the roots of ``f`` of multiplicity ``k``.
    Constant layers are omitted.
    """
    f = _poly(f)
    if f.degree < 1:
        raise PolynomialError("squarefree_decomposition needs degree >= 1")
    df = derivative(f)
    a = gcd(f, df)
    b = poly_divmod(f, a)[0]
    c = poly_divmod(df, a)[0]
    d = c - derivative(b)
    out = []
    k = 1
    while b.degree > 0:
        a = gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = poly_divmod(b, a)[0]
        c = poly_divmod(d, a)[0]
        d = c - derivative(b)
        k += 1
    return out


def _strip_zero_roots(f: Polynomial) -> Polynomial:
    k = 0
    while f.coeffs[k] == 0:
        k += 1
    return Polynomial(f.coeffs[k:])


def _detach(p: Polynomial, lo: Fraction, hi: Fraction, depth: int, max_depth: int):
    """Shrink a one-root interval until neither endpoint is a root of ``p``.

    Returns ``(lo, hi, kind)``; the kind becomes EXACT if a midpoint hits the root.
    """
    while evaluate(p, lo) == 0 or evaluate(p, hi) == 0:
        if depth >= max_depth:
            raise UnresolvedIntervalError(
                f"could not detach ({format_scalar(lo)}, {format_scalar(hi)}) "
                f"within {max_depth} bisections"
            )
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            return mid, mid, EXACT
        if transform_count(p, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
        depth += 1
    return lo, hi, OPEN


def integer_leading(p: Polynomial) -> int:
    """Leading coefficient of the primitive integer multiple of ``p``."""
    den = math.lcm(*(c.denominator for c in p.coeffs))
    nums = [int(c * den) for c in p.coeffs]
    return abs(nums[-1]) // math.gcd(*nums)


# at most this many k/L candidates are evaluated at once; wider intervals are
# bisected first
_CANDIDATE_LIMIT = 8


def rational_root_in(p: Polynomial, lo: Fraction, hi: Fraction, lead: int) -> Optional[Fraction]:
    """The rational root of ``p`` in (lo, hi), if its single root there is rational.

    ``(lo, hi)`` must hold exactly one root.  Any rational root of a primitive
    integer polynomial with leading coefficient ``lead`` is ``k / lead``.
    """
    while True:
        k_lo = math.floor(lo * lead) + 1
        k_hi = math.ceil(hi * lead) - 1
        if k_hi - k_lo < _CANDIDATE_LIMIT:
            for k in range(k_lo, k_hi + 1):
                x = Fraction(k, lead)
                if evaluate(p, x) == 0:
                    return x
            return None
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            return mid
        if transform_count(p, lo, mid) == 1:
            hi = mid
        else:
            lo = mid


def isolate_squarefree(
    p, max_depth: int = DEFAULT_MAX_DEPTH, exact_rationals: bool = True
) -> list[tuple[Fraction, Fraction, str]]:
    """Isolate the positive roots of a squarefree ``p`` with ``p(0) != 0``.

    With ``exact_rationals`` every rational root is reported as EXACT, not
    only those that a bisection midpoint happens to hit.
    """
    p = _poly(p)
    lead = integer_leading(p)
    found = []
    cur = p
    stack = [(Fraction(0), cauchy_bound(p), 0)]
    while stack:
        lo, hi, depth = stack.pop()
        count = transform_count(cur, lo, hi)
        if count == 0:
            continue
        if count == 1:
            root = _detach(p, lo, hi, depth, max_depth)
            if exact_rationals and root[2] == OPEN:
                x = rational_root_in(p, root[0], root[1], lead)
                if x is not None:
                    root = (x, x, EXACT)
            found.append(root)
            continue
        if depth >= max_depth:
            raise UnresolvedIntervalError(
                f"interval ({format_scalar(lo)}, {format_scalar(hi)}) still counts "
                f"{count} after {max_depth} bisections"
            )
        mid = (lo + hi) / 2
        if evaluate(cur, mid) == 0:
            cur = div_linear(cur, mid)[0]
            found.append((mid, mid, EXACT))
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    found.sort(key=lambda r: r[0])
    return found


def isolate_positive(
    f, max_depth: int = DEFAULT_MAX_DEPTH, exact_rationals: bool = True
) -> Isolation:
    """Certified isolation of every positive root of ``f``, with multiplicities.

    Roots at zero are not positive and are stripped first.
    """
    f = _poly(f)
    if f.degree < 1:
        raise PolynomialError("isolate_positive needs degree >= 1")
    f = _strip_zero_roots(f)
    if f.degree < 1:
        return Isolation()
    layers = squarefree_decomposition(f)
    sqf = squarefree_part(f)
    roots = []
    for lo, hi, kind in isolate_squarefree(sqf, max_depth, exact_rationals):
        if kind == EXACT:
            m = exact_multiplicity(f, lo)
        else:
            m = _open_multiplicity(layers, lo, hi)
        roots.append(RootInterval(lo, hi, kind, m))
    return Isolation(tuple(roots))


def exact_multiplicity(f, c: ScalarLike) -> int:
    """Largest ``m`` with ``(c - x)**m`` dividing a nonzero ``f``."""
    f = _poly(f)
    c = as_scalar(c)
    m = 0
    while f.degree >= 1:
        q, r = div_linear(f, c)
        if r != 0:
            break
        f, m = q, m + 1
    return m


def _open_multiplicity(layers, lo: Fraction, hi: Fraction) -> int:
    hits = [k for s, k in layers if transform_count(s, lo, hi) == 1]
    if len(hits) != 1:
        raise UnresolvedIntervalError(
            f"({format_scalar(lo)}, {format_scalar(hi)}) matched {len(hits)} multiplicity layers"
        )
    return hits[0]


def pz(f) -> int:
    """Number of positive roots of a nonzero ``f``, with multiplicity."""
    f = _poly(f)
    if f.is_zero():
        raise PolynomialError("pz needs a nonzero polynomial")
    if f.degree == 0:
        return 0
    return isolate_positive(f).pz


def certify(f, iso: Isolation) -> Optional[str]:
    """Re-check an isolation against ``f``; return a reason string on failure."""
    f = _strip_zero_roots(_poly(f))
    if f.degree < 1:
        return None if not iso.roots else "constant polynomial has no roots"
    sqf = squarefree_part(f)
    for prev, r in zip(iso.roots, iso.roots[1:]):
        # open intervals exclude their endpoints, so touching is allowed
        if r.lo < prev.hi or (prev.kind == r.kind == EXACT and prev.lo == r.lo):
            return f"{r.to_text()} overlaps {prev.to_text()}"
    for r in iso.roots:
        if r.kind == EXACT:
            if evaluate(f, r.lo) != 0:
                return f"{r.to_text()} is not a root"
            if exact_multiplicity(f, r.lo) != r.multiplicity:
                return f"{r.to_text()} has the wrong multiplicity"
        else:
            if transform_count(sqf, r.lo, r.hi) != 1:
                return f"{r.to_text()} does not count exactly one root"
            if evaluate(sqf, r.lo) * evaluate(sqf, r.hi) >= 0:
                return f"{r.to_text()} has no endpoint sign change"
    return None
