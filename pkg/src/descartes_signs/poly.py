"""Dense univariate polynomials over exact rationals.

Coefficients are stored ascending, ``coeffs[i]`` is the coefficient of
``x**i``.  Trailing zeros are trimmed on construction, so the zero polynomial
is the empty tuple and ``degree`` is structural.

Besides the usual ring operations this module carries the transforms used by
the sign-change lemma: multiplication and exact division by ``(c - x)``,
the argument scaling ``f(x) -> f(c*x)`` and the partial-sum system that
inverts multiplication by ``(1 - x)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PolynomialError
from .scalar import ScalarLike, as_scalar, format_scalar, parse_scalar


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def parse(cls, text: str, descending: bool = False) -> "Polynomial":
        """Parse a whitespace-separated coefficient list, e.g. ``"6 -11 6 -1"``."""
        tokens = text.split()
        if descending:
            tokens.reverse()
        return cls(parse_scalar(t) for t in tokens)

    @classmethod
    def monomial(cls, k: int, c: ScalarLike = 1) -> "Polynomial":
        return cls([0] * k + [c])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise PolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Polynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Polynomial([" + ", ".join(format_scalar(c) for c in self.coeffs) + "])"

    def to_text(self) -> str:
        return " ".join(format_scalar(c) for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return poly_divmod(self, _coerce(other))

    def __floordiv__(self, other):
        return poly_divmod(self, _coerce(other))[0]

    def __mod__(self, other):
        return poly_divmod(self, _coerce(other))[1]

    def __call__(self, x: ScalarLike) -> Fraction:
        return evaluate(self, as_scalar(x))

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        return Polynomial(c / lc for c in self.coeffs)


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (list, tuple)):
        return Polynomial(x)
    return Polynomial([as_scalar(x)])


def _as_poly(f) -> Polynomial:
    return f if isinstance(f, Polynomial) else Polynomial(f)


def from_roots(roots: Iterable[tuple[ScalarLike, int]], cofactor=(1,)) -> Polynomial:
    """Build ``prod (c - x)**m * cofactor`` from ``(c, m)`` pairs."""
    f = _as_poly(cofactor)
    for c, m in roots:
        c = as_scalar(c)
        for _ in range(m):
            f = mul_linear(f, c)
    return f


def evaluate(f, x: Fraction) -> Fraction:
    """Horner evaluation of ``f`` at ``x``."""
    acc = Fraction(0)
    for c in reversed(_as_poly(f).coeffs):
        acc = acc * x + c
    return acc


def mul_linear(g, c: ScalarLike) -> Polynomial:
    """Return ``(c - x) * g``.

    Coefficientwise ``a_k = c*b_k - b_{k-1}``.
    """
    g = _as_poly(g)
    if g.is_zero():
        raise PolynomialError("mul_linear needs a nonzero polynomial")
    c = as_scalar(c)
    b = g.coeffs
    out = [c * b[0]]
    for k in range(1, len(b)):
        out.append(c * b[k] - b[k - 1])
    out.append(-b[-1])
    return Polynomial(out)


def div_linear(f, c: ScalarLike) -> tuple[Polynomial, Fraction]:
    """Divide ``f`` by ``(c - x)``.

    Returns ``(q, r)`` with ``f = (c - x)*q + r`` and ``r = f(c)``.
    """
    f = _as_poly(f)
    if f.is_zero():
        raise PolynomialError("div_linear needs a nonzero polynomial")
    c = as_scalar(c)
    # synthetic division by the monic (x - c) gives f = (x - c)*s + r; q = -s
    a = f.coeffs
    n = len(a) - 1
    s = [Fraction(0)] * n
    acc = Fraction(0)
    for k in range(n, 0, -1):
        acc = acc * c + a[k]
        s[k - 1] = acc
    r = acc * c + a[0]
    return Polynomial(-x for x in s), r


def scale_argument(f, c: ScalarLike) -> Polynomial:
    """Return ``f(c*x)``, i.e. coefficients ``a_i * c**i``; ``c`` must be positive."""
    f = _as_poly(f)
    c = as_scalar(c)
    if c <= 0:
        raise PolynomialError(f"scale_argument needs c > 0, got {format_scalar(c)}")
    out = []
    power = Fraction(1)
    for a in f.coeffs:
        out.append(a * power)
        power *= c
    return Polynomial(out)


def partial_sum_transform(a: Sequence[ScalarLike]) -> list[Fraction]:
    """Solve ``a = (1 - x) * b`` for ``b``.

    ``b_k = a_0 + ... + a_k`` for ``k < n``; the system is consistent only
    when the full sum vanishes and ``a_n != 0``.
    """
    a = [as_scalar(x) for x in a]
    if len(a) < 2:
        raise PolynomialError("partial_sum_transform needs at least two coefficients")
    if a[-1] == 0:
        raise PolynomialError("partial_sum_transform needs a nonzero last coefficient")
    b = []
    total = Fraction(0)
    for x in a[:-1]:
        total += x
        b.append(total)
    if total + a[-1] != 0:
        raise PolynomialError(
            f"coefficients sum to {format_scalar(total + a[-1])}, not 0: 1 is not a root"
        )
    return b


def derivative(f) -> Polynomial:
    f = _as_poly(f)
    return Polynomial(i * c for i, c in enumerate(f.coeffs) if i > 0)


def poly_divmod(f, g) -> tuple[Polynomial, Polynomial]:
    """Euclidean division over the rationals."""
    f, g = _as_poly(f), _as_poly(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    lc = g.leading
    if len(r) - 1 < dg:
        return Polynomial(), f
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        t = r[k + dg] / lc
        q[k] = t
        if t:
            for j, gc in enumerate(g.coeffs):
                r[k + j] -= t * gc
    return Polynomial(q), Polynomial(r[:dg])


def gcd(f, g) -> Polynomial:
    """Monic gcd by Euclid's algorithm."""
    f, g = _as_poly(f), _as_poly(g)
    if f.is_zero() and g.is_zero():
        raise PolynomialError("gcd of two zero polynomials is undefined")
    while g:
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def cauchy_bound(f) -> Fraction:
    """``1 + max |a_i / a_n|``; every root lies strictly inside."""
    f = _as_poly(f)
    if f.degree < 1:
        raise PolynomialError("cauchy_bound needs degree >= 1")
    lc = abs(f.leading)
    return 1 + max(abs(a) for a in f.coeffs[:-1]) / lc
