import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from abelcenter.ratpoly import UNIT, Interval, Poly, compose

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def polys(draw, max_degree=6, elements=small_ints):
    cs = draw(st.lists(elements, min_size=0, max_size=max_degree + 1))
    return Poly(cs)


@st.composite
def intervals(draw):
    a = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
    b = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(lambda v: v != a))
    return Interval(a, b)


def vanishing(iv: Interval, g: Poly) -> Poly:
    """``(x - a)(x - b) g``: an element of the space vanishing at both ends."""
    return Poly.from_roots([iv.a, iv.b]) * g


@st.composite
def space_polys(draw, max_degree=6, iv=UNIT):
    g = draw(polys(max_degree=max_degree - 2))
    return vanishing(iv, g)


def random_space_poly(rng: random.Random, degree: int, iv: Interval = UNIT, bound: int = 4) -> Poly:
    while True:
        g = Poly([rng.randint(-bound, bound) for _ in range(degree - 1)])
        if g.degree == degree - 2:
            return vanishing(iv, g)


def random_equal_ends(rng: random.Random, degree: int, iv: Interval = UNIT) -> Poly:
    return random_space_poly(rng, degree, iv) + Poly.const(rng.randint(-3, 3))


def random_composition_pair(rng: random.Random, w_degree: int, outer_p: int, outer_q: int,
                            iv: Interval = UNIT) -> tuple[Poly, Poly, Poly]:
    """``(P, Q, W)`` with ``P, Q`` in ``C[W]``, vanishing at both ends."""
    W = random_equal_ends(rng, w_degree, iv)
    wa = W(iv.a)

    def lift(deg):
        A = Poly([rng.randint(-3, 3) for _ in range(deg)] + [rng.choice((-2, -1, 1, 2))])
        return A - Poly.const(A(wa))

    return compose(lift(outer_p), W), compose(lift(outer_q), W), W


@pytest.fixture
def rng():
    return random.Random(20240611)


def frac(s) -> Fraction:
    return Fraction(s)


def moment_free_q(rng: random.Random, P: Poly, degree: int, n_moments: int, iv: Interval = UNIT) -> Poly:
    """Random ``Q`` vanishing at both ends with ``m_1 .. m_n`` equal to zero."""
    from abelcenter import linalg
    from abelcenter.moments import moment

    basis = [vanishing(iv, Poly.monomial(i)) for i in range(degree - 1)]
    rows = [[moment(P, B, iv, l) for B in basis] for l in range(1, n_moments + 1)]
    ns = linalg.nullspace(rows, len(basis))
    while True:
        Q = Poly()
        for v in ns:
            c = rng.randint(-3, 3)
            for ci, B in zip(v, basis):
                Q = Q + B.scale(ci * c)
        if Q:
            return Q


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
