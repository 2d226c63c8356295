from fractions import Fraction

import sympy as sp
from sympy.polys.subresultants_qq_zz import sylvester
from hypothesis import given, strategies as st

from abelcenter import linalg
from abelcenter.ratpoly import Poly

from .conftest import polys

matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=4)
)


@given(matrices)
def test_rank_and_nullspace_against_sympy(rows):
    M = sp.Matrix(rows)
    assert linalg.rank(rows) == M.rank()
    ns = linalg.nullspace(rows)
    assert len(ns) == len(rows[0]) - M.rank()
    for v in ns:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_against_sympy(rows):
    assert linalg.det(rows) == Fraction(str(sp.Matrix(rows).det()))


@given(matrices, st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve_consistency(rows, rhs):
    rhs = rhs[: len(rows)]
    sol = linalg.solve(rows, rhs)
    M = sp.Matrix(rows)
    aug_rank = M.row_join(sp.Matrix(rhs)).rank()
    assert (sol is None) == (aug_rank > M.rank())
    if sol is not None:
        assert [sum(Fraction(a) * v for a, v in zip(r, sol)) for r in rows] == [Fraction(b) for b in rhs]


@given(polys(max_degree=4).filter(lambda p: p.degree >= 1), polys(max_degree=4).filter(lambda p: p.degree >= 1))
def test_resultant_against_sympy(f, g):
    # sympy's own resultant() can flip sign on sparse inputs (x + 1, x^3); the
    # determinant of its Sylvester matrix is the reference here.
    x = sp.Symbol("x")
    sf = sp.Add(*(sp.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(f.coeffs)))
    sg = sp.Add(*(sp.Rational(c.numerator, c.denominator) * x ** i for i, c in enumerate(g.coeffs)))
    assert linalg.resultant(f, g) == Fraction(str(sylvester(sf, sg, x).det()))


def test_resultant_product_formula():
    # Res(f, g) = lc(f)^deg g * prod g(roots of f)
    f = Poly.from_roots([1, -2], lead=3)
    g = Poly([5, 0, 1, 2])
    assert linalg.resultant(f, g) == 3 ** 3 * g(1) * g(-2)
    assert linalg.resultant(Poly([1, 1]), Poly([0, 0, 0, 1])) == -1


def test_resultant_detects_common_root():
    f = Poly.from_roots([1, 2])
    g = Poly.from_roots([2, 5, -1])
    assert linalg.resultant(f, g) == 0


def test_poly_det_matches_pointwise_det():
    K = Poly.x()
    rows = [[K + 1, 2 * K, Poly.const(3)], [K, K - 4, K * K], [Poly.const(1), K, 7 * K]]
    D = linalg.poly_det(rows)
    for k in range(-3, 4):
        assert D(k) == linalg.det([[e(k) for e in r] for r in rows])


def test_span_intersection():
    x = Poly.x()
    U = [x, x ** 2]
    V = [x + x ** 2, x ** 3]
    inter = linalg.intersect_spans(U, V)
    assert len(inter) == 1
    assert linalg.coordinates(U, inter[0]) is not None
    assert linalg.coordinates(V, inter[0]) is not None
    assert linalg.coordinates(U, x ** 3) is None
