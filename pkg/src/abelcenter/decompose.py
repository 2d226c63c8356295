"""Right composition factors, [a,b]-factors and moment-vanishing structure.

Right factors are recorded by their canonical representative: monic with zero
constant term, one per class ``{lam o W : deg lam = 1}``.  Over a field of
characteristic zero a polynomial has at most one such factor in each degree, so
per divisor degree a single candidate (the polynomial part of a formal k-th root
at infinity) is generated and then tested by W-adic expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from . import linalg
from .ratpoly import Interval, Poly, compose


class PreconditionError(ValueError):
    """Input outside the space an operation is defined on."""


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def normalize_factor(W: Poly) -> Poly:
    """Canonical class representative: monic, zero constant term."""
    if W.degree < 1:
        raise ValueError("a right factor must be nonconstant")
    return (W - W[0]).monic()


def kth_root_candidate(P: Poly, m: int) -> Optional[Poly]:
    """The only possible normalized right factor of ``P`` of degree ``m``.

    With ``n = deg P = k m`` the top ``m`` coefficients of ``W**k`` must agree with
    those of ``P / lc(P)``; reversing both turns this into a truncated power
    series k-th root, solved term by term with the J.C.P. Miller recurrence.
    """
    n = P.degree
    if P.degree < 2 or m < 2 or m >= n or n % m:
        raise PreconditionError(f"need 2 <= m < deg P with m | deg P (m={m}, deg P={n})")
    k = n // m
    lead = P.lc
    f = [P[n - i] / lead for i in range(m)]  # reversed, f[0] = 1
    alpha = Fraction(1, k)
    g = [Fraction(1)]
    for j in range(1, m):
        acc = sum(((alpha + 1) * i - j) * f[i] * g[j - i] for i in range(1, j + 1))
        g.append(acc / j)
    return Poly([0] + [g[m - i] for i in range(1, m + 1)])


def w_adic_expansion(P: Poly, W: Poly) -> list[Poly]:
    """Digits ``r_i`` with ``P = sum r_i W**i`` and ``deg r_i < deg W``."""
    if W.degree < 1:
        raise ValueError("W-adic expansion needs a nonconstant W")
    digits = []
    rest = P
    while rest:
        rest, r = divmod(rest, W)
        digits.append(r)
    return digits or [Poly()]


def outer_factor(P: Poly, W: Poly) -> Optional[Poly]:
    """``Pt`` with ``P = Pt o W`` if it exists, else None."""
    digits = w_adic_expansion(P, W)
    if any(d.degree > 0 for d in digits):
        return None
    return Poly([d[0] for d in digits])


@dataclass(frozen=True)
class RightFactor:
    degree: int
    W: Poly
    outer: Poly  # subject == outer o W

    def __str__(self) -> str:
        return f"W = {self.W}  (degree {self.degree})"


@dataclass(frozen=True)
class FactorReport:
    subject: Poly
    interval: Interval
    right_factors: tuple[RightFactor, ...]
    ab_factors: tuple[RightFactor, ...]
    ab_indecomposable: tuple[RightFactor, ...]

    @property
    def s(self) -> int:
        return len(self.ab_indecomposable)


def right_factors(P: Poly) -> list[RightFactor]:
    """All normalized right factors of degree >= 2, including ``P`` itself."""
    n = P.degree
    if P.degree < 2:
        raise PreconditionError("factor search needs deg P >= 2")
    out = []
    for m in divisors(n):
        if m < 2:
            continue
        if m == n:
            W = normalize_factor(P)
        else:
            W = kth_root_candidate(P, m)
        Pt = outer_factor(P, W)
        if Pt is not None:
            out.append(RightFactor(m, W, Pt))
    return out


def _is_right_factor_of(V: RightFactor, W: RightFactor) -> bool:
    return W.degree % V.degree == 0 and outer_factor(W.W, V.W) is not None


def factor_report(P: Poly, iv: Interval) -> FactorReport:
    rf = right_factors(P)
    ab = [f for f in rf if iv.equal_ends(f.W)]
    indec = [
        W for W in ab
        if not any(V.degree < W.degree and _is_right_factor_of(V, W) for V in ab)
    ]
    return FactorReport(P, iv, tuple(rf), tuple(ab), tuple(indec))


def ab_indecomposable(P: Poly, iv: Interval) -> bool:
    """``P(a) = P(b)`` and no right [a,b]-factor of smaller degree."""
    if not iv.equal_ends(P) or P.degree < 2:
        return False
    rep = factor_report(P, iv)
    return len(rep.ab_indecomposable) == 1 and rep.ab_indecomposable[0].degree == P.degree


@dataclass(frozen=True)
class CompositionWitness:
    W: Poly
    P_tilde: Poly
    Q_tilde: Poly

    def check(self, P: Poly, Q: Poly, iv: Interval) -> bool:
        return (compose(self.P_tilde, self.W) == P and compose(self.Q_tilde, self.W) == Q
                and iv.equal_ends(self.W) and self.W.degree >= 2)


def _require_in_space(iv: Interval, **polys: Poly) -> None:
    for name, f in polys.items():
        if not iv.vanishes_at_ends(f):
            raise PreconditionError(f"{name} must vanish at a = {iv.a} and b = {iv.b}")


def composition_condition(P: Poly, Q: Poly, iv: Interval) -> Optional[CompositionWitness]:
    """A common right [a,b]-factor of ``P`` and ``Q`` with both lifts, or None.

    The largest such factor is returned.  Zero polynomials compose with anything.
    """
    _require_in_space(iv, P=P, Q=Q)
    if not P and not Q:
        W = Poly.from_roots([iv.a, iv.b])
        return CompositionWitness(W, Poly(), Poly())
    if not P:
        W = normalize_factor(Q)
        return CompositionWitness(W, Poly(), outer_factor(Q, W))
    candidates = sorted(factor_report(P, iv).ab_factors, key=lambda f: -f.degree)
    for f in candidates:
        if Q.degree != float("-inf") and Q.degree % f.degree:
            continue
        Qt = outer_factor(Q, f.W)
        if Qt is not None:
            return CompositionWitness(f.W, f.outer, Qt)
    return None


@dataclass(frozen=True)
class MomentDecomposition:
    """``Q = constant + sum_j S_j(W_j)`` when ``vanishes``; empty otherwise."""

    vanishes: bool
    factors: tuple[Poly, ...] = ()
    components: tuple[Poly, ...] = ()
    constant: Fraction = Fraction(0)

    def reconstruct(self) -> Poly:
        total = Poly.const(self.constant)
        for W, S in zip(self.factors, self.components):
            total = total + compose(S, W)
        return total


def moment_vanishing_structural(P: Poly, Q: Poly, iv: Interval,
                                degree_bound: Optional[int] = None) -> MomentDecomposition:
    """Decide whether all moments ``int P**k q`` vanish from the factor structure.

    Moments vanish iff ``Q`` lies in ``C + sum_j C[W_j]`` over the
    [a,b]-indecomposable right factors ``W_j`` of ``P``.  Powers ``W_j**i`` are
    admitted up to ``degree_bound`` (default ``deg P + deg Q``) so that
    cancelling leading terms between different ``S_j(W_j)`` are covered.
    """
    if not iv.equal_ends(P):
        raise PreconditionError("P(a) = P(b) is required")
    if P.degree < 2:
        # constant P: every moment is a multiple of Q(b) - Q(a)
        return MomentDecomposition(iv.equal_ends(Q), constant=Q(iv.a) if iv.equal_ends(Q) else Fraction(0))
    Ws = [f.W for f in factor_report(P, iv).ab_indecomposable]
    if not Q:
        return MomentDecomposition(True, tuple(Ws), tuple(Poly() for _ in Ws))
    if degree_bound is None:
        degree_bound = int(P.degree + max(Q.degree, 0))
    labels = [(None, 0)]
    vectors = [Poly.const(1)]
    for j, W in enumerate(Ws):
        power = W
        i = 1
        while power.degree <= degree_bound:
            labels.append((j, i))
            vectors.append(power)
            power = power * W
            i += 1
    coords = linalg.coordinates(vectors, Q)
    if coords is None:
        return MomentDecomposition(False)
    comps = [[Fraction(0)] for _ in Ws]
    constant = Fraction(0)
    for (j, i), c in zip(labels, coords):
        if j is None:
            constant = c
        else:
            comps[j].extend([Fraction(0)] * (i + 1 - len(comps[j])))
            comps[j][i] = c
    return MomentDecomposition(True, tuple(Ws), tuple(Poly(c) for c in comps), constant)


def definite(P: Poly, iv: Interval) -> bool:
    """Exactly one [a,b]-indecomposable right factor, up to equivalence."""
    if not iv.equal_ends(P):
        raise PreconditionError("definiteness needs P(a) = P(b)")
    return factor_report(P, iv).s == 1


@dataclass(frozen=True)
class CompositionSubspace:
    W: Poly
    basis: tuple[Poly, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def composition_set_basis(Q: Poly, d: int, iv: Interval) -> list[CompositionSubspace]:
    """The linear pieces ``{Pt(W_j)} ∩ P_d`` whose union is the composition set."""
    _require_in_space(iv, Q=Q)
    out = []
    for f in factor_report(Q, iv).ab_indecomposable:
        wa = f.W(iv.a)
        basis = tuple(f.W ** i - wa ** i for i in range(1, d // f.degree + 1))
        out.append(CompositionSubspace(f.W, basis))
    return out


def pairwise_intersections(pieces: list[CompositionSubspace]) -> dict[tuple[int, int], list[Poly]]:
    return {
        (i, j): linalg.intersect_spans(pieces[i].basis, pieces[j].basis)
        for i in range(len(pieces)) for j in range(i + 1, len(pieces))
    }


def _prime_factors(n: int) -> set[int]:
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def _support(f: Poly) -> list[int]:
    return [i for i, c in enumerate(f.coeffs) if c and i >= 2]


def prime_power_support(P: Poly, primes: Optional[Iterable[int]] = None) -> bool:
    """Membership in U(R): every exponent is coprime to all of R or a power of
    one prime of R.  ``primes=None`` means all primes.  Exponents 0 and 1 are
    always admitted."""
    R = None if primes is None else set(primes)
    for i in _support(P):
        pf = _prime_factors(i)
        is_power = len(pf) == 1 and (R is None or pf <= R)
        coprime = R is not None and not (pf & R)
        if not (is_power or coprime):
            return False
    return True


def prime_factor_support(Q: Poly, primes: Optional[Iterable[int]] = None) -> bool:
    """Membership in U1(R): every exponent has all its prime factors in R."""
    if primes is None:
        return True
    R = set(primes)
    return all(_prime_factors(i) <= R for i in _support(Q))
