from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from descartes_signs.errors import PolynomialError
from descartes_signs.poly import (
    Polynomial,
    cauchy_bound,
    derivative,
    div_linear,
    evaluate,
    gcd,
    mul_linear,
    partial_sum_transform,
    poly_divmod,
    scale_argument,
)
from strategies import polys, positive_scalars, scalars, step_sequences

X = sympy.Symbol("x")

F = Fraction


def brute_eval(coeffs, x):
    return sum((c * x**i for i, c in enumerate(coeffs)), Fraction(0))


def to_sympy(f):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], X, domain="QQ")


def from_sympy(p):
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))


def test_trims_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([]).degree == -1
    assert Polynomial([5]).degree == 0


def test_immutable():
    f = Polynomial([1, 2])
    with pytest.raises(AttributeError):
        f.coeffs = ()


def test_parse_text_form():
    assert Polynomial.parse("6 -11 6 -1") == [6, -11, 6, -1]
    assert Polynomial.parse("-1 6 -11 6", descending=True) == [6, -11, 6, -1]
    assert Polynomial.parse("") .is_zero()
    assert Polynomial.parse("1/2 -3/4").to_text() == "1/2 -3/4"


@pytest.mark.parametrize(
    "f, x, value",
    [([6, -11, 6, -1], 2, 0), ([], 5, 0), ([1, 0, 1], F(1, 2), F(5, 4))],
)
def test_evaluate_examples(f, x, value):
    assert evaluate(Polynomial(f), F(x)) == value


@given(polys(), scalars)
def test_evaluate_matches_power_sum(f, x):
    assert evaluate(f, x) == brute_eval(f.coeffs, x)


@pytest.mark.parametrize(
    "g, c, f",
    [([1], 1, [1, -1]), ([1, 1], 1, [1, 0, -1]), ([2, -3, 1], 3, [6, -11, 6, -1])],
)
def test_mul_linear_examples(g, c, f):
    assert mul_linear(Polynomial(g), c) == f


def test_mul_linear_rejects_zero():
    with pytest.raises(PolynomialError):
        mul_linear(Polynomial(), 1)


@given(polys(), scalars)
def test_mul_linear_matches_generic_product(g, c):
    f = mul_linear(g, c)
    assert f == g * Polynomial([c, -1])
    assert f.degree == g.degree + 1
    assert evaluate(f, c) == 0


@pytest.mark.parametrize(
    "f, c, q, r",
    [([1, 0, -1], 1, [1, 1], 0), ([6, -11, 6, -1], 2, [3, -4, 1], 0)],
)
def test_div_linear_examples(f, c, q, r):
    assert div_linear(Polynomial(f), c) == (Polynomial(q), r)


def test_div_linear_remainder_is_value():
    _, r = div_linear(Polynomial([1, 1]), 1)
    assert r == 2


def test_div_linear_rejects_zero():
    with pytest.raises(PolynomialError):
        div_linear(Polynomial(), 1)


@given(polys(), scalars)
def test_div_linear_identity(f, c):
    q, r = div_linear(f, c)
    assert Polynomial([c, -1]) * q + r == f
    assert r == brute_eval(f.coeffs, c)


@given(polys(), scalars)
def test_div_mul_round_trip(g, c):
    assert div_linear(mul_linear(g, c), c) == (g, 0)


@pytest.mark.parametrize(
    "f, c, out",
    [
        ([6, -11, 6, -1], 1, [6, -11, 6, -1]),
        ([6, -11, 6, -1], 2, [6, -22, 24, -8]),
        ([1, -1], F(1, 2), [1, F(-1, 2)]),
    ],
)
def test_scale_argument_examples(f, c, out):
    assert scale_argument(Polynomial(f), c) == out


@pytest.mark.parametrize("c", [0, -1, F(-1, 3)])
def test_scale_argument_rejects_nonpositive(c):
    with pytest.raises(PolynomialError):
        scale_argument(Polynomial([1, 1]), c)


@given(polys(), positive_scalars, scalars)
def test_scale_argument_is_substitution(f, c, x):
    assert evaluate(scale_argument(f, c), x) == evaluate(f, c * x)


@pytest.mark.parametrize(
    "a, b",
    [([1, -1], [1]), ([6, -11, 6, -1], [6, -5, 1]), ([1, -2, 1], [1, -1])],
)
def test_partial_sum_examples(a, b):
    assert partial_sum_transform(a) == b


@pytest.mark.parametrize("a", [[1, 1], [1], [1, -1, 0], [2, -1, 0, 0]])
def test_partial_sum_rejects(a):
    with pytest.raises(PolynomialError):
        partial_sum_transform(a)


@given(step_sequences())
def test_partial_sum_inverts_mul_linear(a):
    b = partial_sum_transform(a)
    assert mul_linear(Polynomial(b), 1) == a


@given(polys())
def test_mul_linear_then_partial_sum(g):
    assert partial_sum_transform(mul_linear(g, 1).coeffs) == list(g.coeffs)


@pytest.mark.parametrize(
    "f, df",
    [([6, -11, 6, -1], [-11, 12, -3]), ([5], []), ([], [])],
)
def test_derivative_examples(f, df):
    assert derivative(Polynomial(f)) == df


@given(polys())
def test_derivative_matches_sympy(f):
    assert derivative(f) == from_sympy(to_sympy(f).diff(X))


@pytest.mark.parametrize(
    "f, g, d",
    [([1, -2, 1], [2, -3, 1], [-1, 1]), ([1, 0, 1], [1, 1], [1]), ([0, 1], [], [0, 1])],
)
def test_gcd_examples(f, g, d):
    assert gcd(Polynomial(f), Polynomial(g)) == d


def test_gcd_both_zero():
    with pytest.raises(PolynomialError):
        gcd(Polynomial(), Polynomial())


@settings(max_examples=60)
@given(polys(5), polys(5), polys(3))
def test_gcd_matches_sympy(f, g, h):
    f, g = f * h, g * h
    ours = gcd(f, g)
    theirs = from_sympy(sympy.gcd(to_sympy(f), to_sympy(g)).monic())
    assert ours == theirs
    assert ours.leading == 1
    assert poly_divmod(f, ours)[1].is_zero() and poly_divmod(g, ours)[1].is_zero()


@given(polys(), polys(5).filter(bool))
def test_divmod_identity(f, g):
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@pytest.mark.parametrize(
    "f, bound",
    [([6, -11, 6, -1], 12), ([-2, 0, 1], 3), ([0, 1], 1)],
)
def test_cauchy_bound_examples(f, bound):
    assert cauchy_bound(Polynomial(f)) == bound


@pytest.mark.parametrize("f", [[], [3]])
def test_cauchy_bound_rejects_constants(f):
    with pytest.raises(PolynomialError):
        cauchy_bound(Polynomial(f))


@settings(max_examples=80)
@given(polys(8, min_degree=1), st.lists(st.integers(0, 40), min_size=1, max_size=6))
def test_no_roots_outside_cauchy_bound(f, offsets):
    b = cauchy_bound(f)
    for k in offsets:
        r = b + Fraction(k, 4)
        assert evaluate(f, r) != 0
        assert evaluate(f, -r) != 0


@given(polys(), polys())
def test_ring_ops_match_sympy(f, g):
    assert f * g == from_sympy(to_sympy(f) * to_sympy(g))
    assert f - g == from_sympy(to_sympy(f) - to_sympy(g))


def test_power():
    assert Polynomial([1, -1]) ** 2 == [1, -2, 1]
    assert Polynomial([3]) ** 0 == [1]
