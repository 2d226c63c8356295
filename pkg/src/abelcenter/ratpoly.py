"""Exact rational scalars and dense univariate polynomials.

Coefficients are :class:`fractions.Fraction`, stored ascending (index ``i`` is the
coefficient of ``x**i``) with trailing zeros stripped.  Multiplication packs the
integer numerators into a single big integer (Kronecker substitution), which keeps
the degree ~150 products of the return-map recursion cheap.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

NEG_INF = float("-inf")

_KRONECKER_MIN = 12


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _common_denominator(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = reduce(_lcm, (c.denominator for c in coeffs), 1)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _int_convolve(a: list[int], b: list[int]) -> list[int]:
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return out
    bound = min(len(a), len(b)) * max(map(abs, a)) * max(map(abs, b))
    bits = bound.bit_length() + 2
    pa = sum(c << (bits * i) for i, c in enumerate(a))
    pb = sum(c << (bits * i) for i, c in enumerate(b))
    prod = pa * pb
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = prod & mask
        if r >= half:
            r -= 1 << bits
        out.append(r)
        prod = (prod - r) >> bits
    return out


class Poly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "Poly":
        out = cls.const(lead)
        for r in roots:
            out = out * cls((-as_rational(r), 1))
        return out

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations --------------------------------------------------
    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([ai + (b[i] if i < len(b) else 0) for i, ai in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        an, ad = _common_denominator(self.coeffs)
        bn, bd = _common_denominator(other.coeffs)
        den = ad * bd
        return Poly([Fraction(c, den) for c in _int_convolve(an, bn)])

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        c = as_rational(c)
        return Poly([c * a for a in self.coeffs])

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, c: Scalar) -> "Poly":
        return self.scale(1 / as_rational(c))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        if len(rem) - 1 < dq:
            return Poly(), self
        inv = 1 / other.lc
        quo = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                quo[i - dq] = c
                for j, oj in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * oj
        return Poly(quo), Poly(rem[:dq])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    # -- evaluation and composition --------------------------------------
    def __call__(self, arg):
        if isinstance(arg, Poly):
            return compose(self, arg)
        arg = as_rational(arg)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def antiderivative(self, base: Scalar = 0) -> "Poly":
        return antiderivative(self, base)

    def monic(self) -> "Poly":
        return self.scale(1 / self.lc)

    # -- text -------------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return NotImplemented


X = Poly.x()
ONE = Poly.const(1)
ZERO = Poly()


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def mul(f: Poly, g: Poly) -> Poly:
    return f * g


def scale(f: Poly, c: Scalar) -> Poly:
    return f.scale(c)


def compose(f: Poly, g: Poly) -> Poly:
    """Return ``f(g(x))`` (Horner in the ring of polynomials)."""
    acc = Poly()
    for c in reversed(f.coeffs):
        acc = acc * g + c
    return acc


def antiderivative(f: Poly, base: Scalar = 0) -> Poly:
    """The primitive ``F`` of ``f`` with ``F(base) = 0``."""
    F = Poly([0] + [c / (i + 1) for i, c in enumerate(f.coeffs)])
    return F - F(base)


@dataclass(frozen=True)
class Interval:
    """Rational segment endpoints ``(a, b)``; ``a == b`` is rejected."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a == self.b:
            raise ValueError("interval endpoints must differ")

    def vanishes_at_ends(self, f: Poly) -> bool:
        return f(self.a) == 0 and f(self.b) == 0

    def equal_ends(self, f: Poly) -> bool:
        return f(self.a) == f(self.b)

    def to_unit(self) -> Poly:
        """Affine map sending ``a -> 0`` and ``b -> 1``."""
        s = 1 / (self.b - self.a)
        return Poly((-self.a * s, s))

    def from_unit(self) -> Poly:
        """Affine map sending ``0 -> a`` and ``1 -> b``."""
        return Poly((self.a, self.b - self.a))


UNIT = Interval(Fraction(0), Fraction(1))


def definite_integral(f: Poly, iv: Interval) -> Fraction:
    F = antiderivative(f)
    return F(iv.b) - F(iv.a)


def chebyshev(n: int) -> Poly:
    """Classical Chebyshev polynomial ``T_n`` from the three-term recurrence."""
    if n < 1:
        raise ValueError("chebyshev degree must be positive")
    prev, cur = ONE, X
    for _ in range(n - 1):
        prev, cur = cur, X.scale(2) * cur - prev
    return cur


def shifted_chebyshev(n: int) -> Poly:
    """Chebyshev polynomial transported to [0, 1] with rational coefficients.

    ``T_n`` is precomposed with the affine map sending ``[0, 1]`` onto
    ``[-sqrt(3)/2, sqrt(3)/2]``, shifted to vanish at 0 and rescaled to leading
    coefficient ``2**((n - 1) // 2)``.  This reproduces ``x(x-1)``,
    ``x(x-1)(2x-1)`` and ``T~_6 = T~_3**2``; it also vanishes at 1 exactly when
    2 or 3 divides n.
    """
    if n < 1:
        raise ValueError("chebyshev degree must be positive")
    # T_n(sqrt(3) t) has the parity of n: only powers i = n (mod 2) survive, so
    # factoring out sqrt(3)**(n % 2) leaves rational coefficients 3**((i - n%2)/2).
    par = n % 2
    T = chebyshev(n)
    in_t = Poly([c * 3 ** ((i - par) // 2) if i % 2 == par else 0
                 for i, c in enumerate(T.coeffs)])
    f = compose(in_t, Poly((Fraction(-1, 2), 1)))
    f = f - f(0)
    return f.scale(Fraction(2 ** ((n - 1) // 2)) / f.lc)


# -- text grammar -------------------------------------------------------------

class PolyParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text, self.pos = text, pos
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")


_TERM = re.compile(
    r"\s*(?P<coef>\d+(?:\s*/\s*\d+)?)?\s*(?:\*\s*)?(?P<x>x(?:\s*\^\s*(?P<exp>\d+))?)?\s*"
)


def parse_poly(text: str) -> Poly:
    """Parse terms like ``4x^3 - 3x + 1/2`` (whitespace insignificant)."""
    s = text.replace("−", "-")
    coeffs: dict[int, Fraction] = {}
    pos, n = 0, len(s)
    sign = 1
    first = True
    if not s.strip():
        raise PolyParseError(text, 0, "empty polynomial")
    while pos < n:
        while pos < n and s[pos].isspace():
            pos += 1
        if pos < n and s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise PolyParseError(text, pos, "expected '+' or '-'")
        m = _TERM.match(s, pos)
        if not m or (m.group("coef") is None and m.group("x") is None):
            raise PolyParseError(text, pos, "expected a term")
        c = Fraction(re.sub(r"\s", "", m.group("coef"))) if m.group("coef") else Fraction(1)
        if m.group("x") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
        pos = m.end()
        first = False
        sign = 1
    if not coeffs:
        raise PolyParseError(text, 0, "empty polynomial")
    return Poly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Poly) -> str:
    if not f:
        return "0"
    parts = []
    for k in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            xs = "x" if k == 1 else f"x^{k}"
            body = xs if mag == 1 else f"{format_rational(mag)} {xs}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
