"""Generalized moments, iterated integrals and second Melnikov coefficients.

Conventions: ``P`` and ``Q`` are primitives, ``p = P'`` and ``q = Q'``.  A
multi-index ``alpha`` over ``{1, 2}`` names the nested integral whose outermost
integrand is ``h[alpha[0]]`` with ``h[1] = q`` and ``h[2] = p``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratpoly import Interval, Poly, antiderivative, definite_integral


def _check_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(alpha)
    if any(a not in (1, 2) for a in alpha):
        raise ValueError(f"multi-index entries must be 1 or 2, got {alpha}")
    return alpha


def moment(P: Poly, Q: Poly, iv: Interval, l: int) -> Fraction:
    """``m_l = integral_a^b P**l q dx``."""
    if l < 0:
        raise ValueError("moment order must be nonnegative")
    return definite_integral(P ** l * Q.derivative(), iv)


@dataclass(frozen=True)
class MomentVector:
    P: Poly
    Q: Poly
    iv: Interval
    values: tuple[Fraction, ...]

    @property
    def kmax(self) -> int:
        return len(self.values) - 1

    def all_vanish(self) -> bool:
        return all(v == 0 for v in self.values)


def default_kmax(P: Poly, Q: Poly) -> int:
    dp = max(P.degree, 0)
    dq = max(Q.degree, 0)
    return int(dp + dq + 2)


def moments(P: Poly, Q: Poly, iv: Interval, kmax: int | None = None) -> MomentVector:
    """Moments ``m_0 .. m_kmax``, reusing the powers of ``P``."""
    if kmax is None:
        kmax = default_kmax(P, Q)
    q = Q.derivative()
    vals = []
    power = Poly.const(1)
    for _ in range(kmax + 1):
        vals.append(definite_integral(power * q, iv))
        power = power * P
    return MomentVector(P, Q, iv, tuple(vals))


def iterated_integral(alpha: Sequence[int], P: Poly, Q: Poly, iv: Interval) -> Fraction:
    """Nested integral of the word ``alpha``, evaluated inside-out exactly."""
    alpha = _check_alpha(alpha)
    h = {1: Q.derivative(), 2: P.derivative()}
    inner = Poly.const(1)
    for a in reversed(alpha):
        inner = antiderivative(h[a] * inner, iv.a)
    return inner(iv.b)


def weight(alpha: Sequence[int], k: int) -> int:
    """Integer coefficient ``(-1)**s * prod_r (k - alpha_1 - ... - alpha_r)``."""
    alpha = _check_alpha(alpha)
    if sum(alpha) != k - 1:
        raise ValueError(f"sum of {alpha} must equal k - 1 = {k - 1}")
    out = (-1) ** len(alpha)
    partial = 0
    for a in alpha:
        partial += a
        out *= k - partial
    return out


def melnikov_indices(k: int) -> list[tuple[int, ...]]:
    """All words with two 1-entries and 2-entries elsewhere summing to ``k - 1``,
    in lexicographic order."""
    if k % 2 == 0 or k < 5:
        raise ValueError("Melnikov indices need an odd k >= 5")
    s = (k - 3) // 2 + 2
    out = []
    for i, j in itertools.combinations(range(s), 2):
        word = [2] * s
        word[i] = word[j] = 1
        out.append(tuple(word))
    return sorted(out)


def split_alpha(alpha: Sequence[int]) -> tuple[int, int, int]:
    """Counts ``(m0, m1, m2)`` of 2-entries before, between and after the two 1s."""
    alpha = _check_alpha(alpha)
    ones = [i for i, a in enumerate(alpha) if a == 1]
    if len(ones) != 2:
        raise ValueError(f"{alpha} must contain exactly two 1-entries")
    i, j = ones
    return i, j - i - 1, len(alpha) - j - 1


def melnikov_sum(k: int, P: Poly, Q: Poly, iv: Interval, *, by_parts: bool = False) -> Fraction:
    """``sum n_alpha I_alpha`` over the Melnikov words of order ``k``.

    With ``by_parts`` each ``I_alpha`` is taken from :func:`reduce_by_parts`
    instead of direct nesting; this requires ``P(a) = P(b) = 0``.
    """
    total = Fraction(0)
    for alpha in melnikov_indices(k):
        if by_parts:
            val = reduce_by_parts(*split_alpha(alpha), P, Q, iv)
        else:
            val = iterated_integral(alpha, P, Q, iv)
        total += weight(alpha, k) * val
    return total


def double_integral(f: Poly, g: Poly, iv: Interval) -> Fraction:
    """``integral_a^b f(x) (integral_a^x g) dx``."""
    return definite_integral(f * antiderivative(g, iv.a), iv)


def reduce_by_parts(m0: int, m1: int, m2: int, P: Poly, Q: Poly, iv: Interval) -> Fraction:
    """Closed reduction of the two-``q`` iterated integral with ``m0``, ``m1``,
    ``m2`` copies of ``p`` before, between and after the ``q`` entries, to a sum
    of double integrals ``int P**i q int^x P**j q``."""
    if P(iv.a) != 0 or P(iv.b) != 0:
        raise ValueError("reduction by parts needs P(a) = P(b) = 0")
    q = Q.derivative()
    total = Fraction(0)
    for i in range(m1 + 1):
        coef = Fraction((-1) ** (m0 + m1 - i),
                        math.factorial(m0) * math.factorial(m2)
                        * math.factorial(i) * math.factorial(m1 - i))
        total += coef * double_integral(P ** (m0 + i) * q, P ** (m1 + m2 - i) * q, iv)
    return total


def _require_space(P: Poly, Q: Poly, iv: Interval) -> None:
    if not (iv.vanishes_at_ends(P) and iv.vanishes_at_ends(Q)):
        raise ValueError("closed forms need P and Q vanishing at both endpoints")


def melnikov_closed(j: int, P: Poly, Q: Poly, iv: Interval) -> Fraction:
    """Closed forms ``D_1 .. D_4`` of the first four second-Melnikov coefficients.

    ``D_j`` is proportional to ``melnikov_sum(2 j + 3)`` once the lower moments
    ``m_1 .. m_{j-2}`` vanish (constant -1 for j = 1, -2 for j = 2, 3, 4).
    """
    _require_space(P, Q, iv)
    p = P.derivative()
    QQp = Q * Q * p
    if j == 1:
        return definite_integral(QQp, iv)
    if j == 2:
        return definite_integral(QQp * P, iv)
    Qp = Q * p
    if j == 3:
        return 2 * definite_integral(QQp * P ** 2, iv) + double_integral(Qp * P, Qp, iv)
    if j == 4:
        return 4 * definite_integral(QQp * P ** 3, iv) + 3 * double_integral(Qp * P ** 2, Qp, iv)
    raise ValueError("closed forms exist for j = 1..4 only")


def melnikov_closed_d4_unweighted(P: Poly, Q: Poly, iv: Interval) -> Fraction:
    """``int Q**2 P**3 p + int Q P**2 p int^x Q p``: the fourth form without the
    4 and 3 weights.  Kept for comparison; it is not proportional to the order-11
    Melnikov sum."""
    _require_space(P, Q, iv)
    p = P.derivative()
    Qp = Q * p
    return definite_integral(Q * Qp * P ** 3, iv) + double_integral(Qp * P ** 2, Qp, iv)
