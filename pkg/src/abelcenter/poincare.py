"""Power-series Poincaré return map of ``y' = p y**3 + q y**2`` along ``[a, b]``.

Writing the solution with ``y(a) = c`` as ``y = sum u_n(x) c**n`` gives ``u_1 = 1``
and, for ``n >= 2``,

    u_n' = p * [c**n] y**3 + q * [c**n] y**2,     u_n(a) = 0,

so every ``u_n`` is a polynomial in ``x`` and ``v_n = u_n(b)`` is exact.  Cost:
``deg u_n`` grows linearly in ``n`` and the coefficient sizes grow faster, so
orders well beyond 20 become slow in pure Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .moments import definite_integral
from .ratpoly import Interval, Poly, antiderivative

DEFAULT_ORDER = 12

# A polynomial in a formal scalar lam with Poly coefficients: index = lam-degree.
LamPoly = tuple[Poly, ...]


def _lam_trim(f: list[Poly]) -> LamPoly:
    while f and not f[-1]:
        f.pop()
    return tuple(f)


def _lam_add(f: LamPoly, g: LamPoly) -> LamPoly:
    if len(f) < len(g):
        f, g = g, f
    return _lam_trim([fi + g[i] if i < len(g) else fi for i, fi in enumerate(f)])


def _lam_mul(f: LamPoly, g: LamPoly) -> LamPoly:
    if not f or not g:
        return ()
    out = [Poly()] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                if gj:
                    out[i + j] = out[i + j] + fi * gj
    return _lam_trim(out)


def _series(p_lam: LamPoly, q_lam: LamPoly, a: Fraction, order: int) -> list[LamPoly]:
    """``u_1 .. u_order`` (index 0 unused) with ``p``, ``q`` as lam-polynomials."""
    u: list[LamPoly] = [(), (Poly.const(1),)]
    sq: list[LamPoly] = [(), ()]      # sq[n] = [c**n] y**2
    cube: list[LamPoly] = [(), (), ()]  # cube[n] = [c**n] y**3
    for n in range(2, order + 1):
        s2: LamPoly = ()
        for i in range(1, n):
            s2 = _lam_add(s2, _lam_mul(u[i], u[n - i]))
        sq.append(s2)
        s3: LamPoly = ()
        if n >= 3:
            for i in range(1, n - 1):
                s3 = _lam_add(s3, _lam_mul(u[i], sq[n - i]))
        cube.append(s3)
        rhs = _lam_add(_lam_mul(p_lam, s3), _lam_mul(q_lam, s2))
        u.append(tuple(antiderivative(c, a) for c in rhs))
    return u


@dataclass(frozen=True)
class ReturnMapSeries:
    """``G(c) = c + sum_{n>=2} v_n c**n`` truncated at ``order``."""

    order: int
    u: tuple[Poly, ...]
    v: tuple[Fraction, ...]

    def coefficient(self, n: int) -> Fraction:
        if not 2 <= n <= self.order:
            raise IndexError(f"coefficient v_{n} outside 2..{self.order}")
        return self.v[n - 2]

    def evaluate(self, c) -> Fraction:
        c = Fraction(c)
        return c + sum(vn * c ** n for n, vn in enumerate(self.v, start=2))


def return_map(P: Poly, Q: Poly, iv: Interval, order: int = DEFAULT_ORDER) -> ReturnMapSeries:
    if order < 2:
        raise ValueError("series order must be at least 2")
    u = _series((P.derivative(),), (Q.derivative(),), iv.a, order)
    polys = tuple(f[0] if f else Poly() for f in u[1:])
    v = tuple(f(iv.b) for f in polys[1:])
    return ReturnMapSeries(order, polys, v)


@dataclass(frozen=True)
class CenterVerdict:
    order: int
    center: bool
    first_k: int | None = None
    value: Fraction | None = None

    def __str__(self) -> str:
        if self.center:
            return f"center-to-order-{self.order}"
        return f"focus: v_{self.first_k} = {self.value}"


def center_check(P: Poly, Q: Poly, iv: Interval, order: int = DEFAULT_ORDER) -> CenterVerdict:
    series = return_map(P, Q, iv, order)
    for n, vn in enumerate(series.v, start=2):
        if vn != 0:
            return CenterVerdict(order, False, n, vn)
    return CenterVerdict(order, True)


def center_equation_in_lambda(P: Poly, Q: Poly, iv: Interval, k: int) -> tuple[Fraction, ...]:
    """Coefficients of ``v_k(lam * P, Q)`` as a polynomial in ``lam``."""
    if k < 2:
        raise ValueError("center equations start at k = 2")
    u = _series((Poly(), P.derivative()), (Q.derivative(),), iv.a, k)
    return tuple(c(iv.b) for c in u[k])


def leading_part_at_infinity(P: Poly, Q: Poly, iv: Interval, k: int) -> tuple[int, Fraction]:
    """The Center Equation of order ``k`` restricted to the hyperplane at infinity.

    ``v_k(lam P, Q)`` has ``lam``-degree at most ``(k - 1) // 2``; the top term
    only involves ``P(b) - P(a)`` and vanishes on the space of polynomials with
    ``P(a) = P(b)``.  The homogeneous part of degree ``(k - 2) // 2`` (one ``q``
    for even ``k``, two for odd ``k``) is returned, together with that degree.
    """
    if k < 4:
        raise ValueError("equations at infinity are defined for k >= 4")
    if P(iv.a) != P(iv.b):
        raise ValueError("leading part at infinity needs P(a) = P(b)")
    coeffs = list(center_equation_in_lambda(P, Q, iv, k))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = (k - 2) // 2
    if len(coeffs) > deg + 1:
        raise ArithmeticError("lam-degree exceeds the homogeneity bound")
    return deg, coeffs[deg] if deg < len(coeffs) else Fraction(0)


def linear_functional_L(P0: Poly, Q: Poly, P1: Poly, iv: Interval, k: int) -> Fraction:
    """Linear part ``-(k - 3) int P0**(k - 4) q P1`` of the Center Equations near ``P0``."""
    if k < 4:
        raise ValueError("the linearized equations are indexed by k >= 4")
    return -(k - 3) * definite_integral(P0 ** (k - 4) * Q.derivative() * P1, iv)


def numeric_rhs(P: Poly, Q: Poly):
    """Float right-hand side ``f(x, y)`` for cross-checks with ODE solvers."""
    p = [float(c) for c in P.derivative().coeffs]
    q = [float(c) for c in Q.derivative().coeffs]

    def horner(cs: Sequence[float], x: float) -> float:
        acc = 0.0
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def rhs(x, y):
        return [horner(p, x) * y[0] ** 3 + horner(q, x) * y[0] ** 2]

    return rhs
