from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from abelcenter.ratpoly import (
    UNIT,
    Interval,
    Poly,
    PolyParseError,
    add,
    antiderivative,
    chebyshev,
    compose,
    definite_integral,
    format_poly,
    mul,
    parse_poly,
    scale,
    shifted_chebyshev,
)

from .conftest import intervals, polys, rationals

X = Poly.x()
sx = sp.Symbol("x")


def to_sympy(f: Poly):
    return sp.Add(*(sp.Rational(c.numerator, c.denominator) * sx ** i for i, c in enumerate(f.coeffs)))


def test_basic_arithmetic_examples():
    assert add(X, -X) == Poly()
    assert mul(X - 1, X + 1) == parse_poly("x^2 - 1")
    assert scale(X * 2, Fraction(1, 2)) == X


def test_compose_examples():
    assert compose(X ** 2, X + 1) == parse_poly("x^2 + 2x + 1")
    f = parse_poly("3x^4 - 1/2 x + 7")
    assert compose(f, X) == f


def test_antiderivative_examples():
    assert antiderivative(2 * X - 1, 0) == X ** 2 - X
    assert antiderivative(Poly(), Fraction(3)) == Poly()
    assert antiderivative(3 * X ** 2, 1) == X ** 3 - 1


def test_definite_integral_examples():
    assert definite_integral(2 * X - 1, UNIT) == 0
    # x^4 (x-1)^2 (2x-1) = 2x^7 - 5x^6 + 4x^5 - x^4 -> 1/4 - 5/7 + 2/3 - 1/5
    f = X ** 4 * (X - 1) ** 2 * (2 * X - 1)
    assert definite_integral(f, UNIT) == Fraction(1, 420)


def test_degree_and_zero():
    assert Poly().degree == float("-inf")
    assert Poly([0, 0]) == Poly()
    assert Poly.const(5).degree == 0
    assert (X ** 7).lc == 1


def test_chebyshev():
    assert chebyshev(1) == X
    assert chebyshev(3) == parse_poly("4x^3 - 3x")
    with pytest.raises(ValueError):
        chebyshev(0)


def test_shifted_chebyshev_small():
    assert shifted_chebyshev(2) == X ** 2 - X
    assert shifted_chebyshev(3) == parse_poly("2x^3 - 3x^2 + x")


def test_shifted_chebyshev_identities():
    T2, T3, T6 = (shifted_chebyshev(n) for n in (2, 3, 6))
    assert T6 == T3 * T3
    assert T6 == T2 ** 2 + 4 * T2 ** 3
    assert compose(X ** 2 + 4 * X ** 3, T2) == compose(X ** 2, T3)


@pytest.mark.parametrize("n", range(1, 13))
def test_shifted_chebyshev_shape(n):
    T = shifted_chebyshev(n)
    assert T.degree == n
    assert T(0) == 0
    assert T.lc == 2 ** ((n - 1) // 2)
    assert (T(1) == 0) == (n % 2 == 0 or n % 3 == 0)


@given(polys(), polys())
def test_ring_laws_against_sympy(f, g):
    assert to_sympy(f * g).expand() == (to_sympy(f) * to_sympy(g)).expand()
    assert to_sympy(f + g) == sp.expand(to_sympy(f) + to_sympy(g))


@given(polys(max_degree=30), polys(max_degree=30))
def test_kronecker_product_matches_schoolbook(f, g):
    expected = [0] * max(len(f.coeffs) + len(g.coeffs) - 1, 0)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            expected[i + j] += a * b
    assert f * g == Poly(expected)


@given(polys(), polys(max_degree=3).filter(lambda p: p.degree >= 0))
def test_divmod(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(polys(max_degree=4), polys(max_degree=3))
def test_compose_against_sympy(f, g):
    assert to_sympy(compose(f, g)).expand() == sp.expand(to_sympy(f).subs(sx, to_sympy(g)))


@given(polys(), rationals)
def test_antiderivative_inverts_derivative(f, base):
    F = antiderivative(f, base)
    assert F.derivative() == f
    assert F(base) == 0


@given(polys(), intervals())
def test_definite_integral_against_sympy(f, iv):
    a = sp.Rational(iv.a.numerator, iv.a.denominator)
    b = sp.Rational(iv.b.numerator, iv.b.denominator)
    assert definite_integral(f, iv) == Fraction(str(sp.integrate(to_sympy(f), (sx, a, b))))


@given(polys(max_degree=8, elements=rationals))
def test_format_parse_round_trip(f):
    assert parse_poly(format_poly(f)) == f


def test_parse_grammar():
    assert parse_poly("4x^3 - 3x") == 4 * X ** 3 - 3 * X
    assert parse_poly(" 1/2 * x ^ 2 −1 ") == X ** 2 / 2 - 1
    assert parse_poly("-x") == -X
    assert parse_poly("0") == Poly()


@pytest.mark.parametrize("text, pos", [("x^^2", 1), ("", 0), ("3x +", 4), ("2 y", 2)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as err:
        parse_poly(text)
    assert err.value.pos == pos
    assert f"position {pos}" in str(err.value)


def test_interval_rejects_degenerate():
    with pytest.raises(ValueError):
        Interval(1, 1)


def test_interval_maps():
    iv = Interval(Fraction(-1, 2), 3)
    assert iv.to_unit()(iv.a) == 0 and iv.to_unit()(iv.b) == 1
    assert compose(iv.to_unit(), iv.from_unit()) == X


def test_poly_is_immutable_and_hashable():
    f = X + 1
    with pytest.raises(AttributeError):
        f.coeffs = ()
    assert len({f, X + 1}) == 1
