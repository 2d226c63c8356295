"""Row reduction over the rationals, plus the few derived quantities the
verification code needs (nullspace, span membership, determinant, resultant)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .ratpoly import Poly, as_rational

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[as_rational(v) for v in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = to_matrix(rows)
    if not m:
        return m, []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], n_cols: int | None = None) -> Matrix:
    """Basis of ``{v : rows @ v = 0}``."""
    if not rows:
        if n_cols is None:
            raise ValueError("n_cols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(n_cols)] for i in range(n_cols)]
    m, pivots = rref(rows)
    n_cols = len(m[0])
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One exact solution of ``rows @ v = rhs`` (free variables set to 0), or None."""
    aug = [list(r) + [b] for r, b in zip(to_matrix(rows), to_matrix([rhs])[0])]
    m, pivots = rref(aug)
    n = len(aug[0]) - 1
    if n in pivots:
        return None
    v = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        v[p] = m[i][n]
    return v


def det(rows: Sequence[Sequence]) -> Fraction:
    m = to_matrix(rows)
    n = len(m)
    sign, acc = 1, Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        acc *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [vi - f * vc for vi, vc in zip(m[i], m[c])]
    return sign * acc


def poly_det(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a small matrix of polynomials by cofactor expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Poly()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def sylvester(f: Poly, g: Poly) -> Matrix:
    m, n = f.degree, g.degree
    size = m + n
    fr = list(reversed(f.coeffs))
    gr = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fr + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gr + [Fraction(0)] * (size - n - 1 - i))
    return rows


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant of two nonconstant polynomials as the Sylvester determinant."""
    if f.degree < 1 or g.degree < 1:
        raise ValueError("resultant needs nonconstant polynomials")
    return det(sylvester(f, g))


def coordinates(vectors: Sequence[Poly], target: Poly) -> list[Fraction] | None:
    """Coefficients expressing ``target`` in the span of ``vectors``, or None."""
    if not vectors:
        return [] if not target else None
    width = max([len(v) for v in vectors] + [len(target)])
    cols = [[v[i] for v in vectors] for i in range(width)]
    return solve(cols, [target[i] for i in range(width)])


def span_basis(vectors: Sequence[Poly]) -> list[Poly]:
    """An echelon basis of the span of the given polynomials."""
    vectors = [v for v in vectors if v]
    if not vectors:
        return []
    width = max(len(v) for v in vectors)
    m, pivots = rref([[v[i] for i in range(width)] for v in vectors])
    return [Poly(m[i]) for i in range(len(pivots))]


def intersect_spans(U: Sequence[Poly], V: Sequence[Poly]) -> list[Poly]:
    """Basis of span(U) ∩ span(V) via the nullspace of [U | -V]."""
    U, V = span_basis(U), span_basis(V)
    if not U or not V:
        return []
    width = max(len(v) for v in list(U) + list(V))
    rows = [[u[i] for u in U] + [-v[i] for v in V] for i in range(width)]
    out = []
    for sol in nullspace(rows):
        w = Poly()
        for c, u in zip(sol[:len(U)], U):
            w = w + u.scale(c)
        out.append(w)
    return span_basis(out)
