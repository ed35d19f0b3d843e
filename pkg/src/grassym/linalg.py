"""Exact rational dense linear algebra.

Scalars are `fractions.Fraction` (always reduced, positive denominator),
so every result below is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction


class RMatrix:
    """Dense matrix of Fractions. Immutable by convention; 0-row matrices allowed."""

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, RMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RMatrix({self.rows!r})"

    def transpose(self):
        return RMatrix([[self.rows[i][j] for i in range(self.nrows)]
                        for j in range(self.ncols)])

    def row(self, i):
        return list(self.rows[i])

    def col(self, j):
        return [self.rows[i][j] for i in range(self.nrows)]


def _echelonize(rows, ncols):
    """In-place exact Gaussian elimination, pivoting on the largest |entry|.

    Returns the list of pivot column indices.
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r >= nrows:
            break
        best, best_i = 0, None
        for i in range(r, nrows):
            a = abs(rows[i][c])
            if a > best:
                best, best_i = a, i
        if best_i is None:
            continue
        rows[r], rows[best_i] = rows[best_i], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                f /= pv
                ri, rr = rows[i], rows[r]
                for j in range(c, ncols):
                    ri[j] -= f * rr[j]
        pivots.append(c)
        r += 1
    return pivots


def rank(M: RMatrix) -> int:
    """Exact rank over the rationals."""
    rows = [list(r) for r in M.rows]
    return len(_echelonize(rows, M.ncols))


def _rank_first_pivot(M: RMatrix) -> int:
    """Second elimination with a different pivot policy (first nonzero); test oracle."""
    rows = [list(r) for r in M.rows]
    r = 0
    for c in range(M.ncols):
        if r >= len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                f /= pv
                for j in range(c, M.ncols):
                    rows[i][j] -= f * rows[r][j]
        r += 1
    return r


def nullspace_basis(M: RMatrix) -> list[list[Fraction]]:
    """Vectors spanning {x : Mx = 0}; exactly ncols - rank(M) of them."""
    rows = [list(r) for r in M.rows]
    piv_cols = _echelonize(rows, M.ncols)
    # back-substitute to reduced echelon form
    for idx in range(len(piv_cols) - 1, -1, -1):
        c = piv_cols[idx]
        pv = rows[idx][c]
        for j in range(c, M.ncols):
            rows[idx][j] /= pv
        for i in range(idx):
            f = rows[i][c]
            if f:
                for j in range(c, M.ncols):
                    rows[i][j] -= f * rows[idx][j]
    free_cols = [c for c in range(M.ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * M.ncols
        vec[fc] = Fraction(1)
        for idx, pc in enumerate(piv_cols):
            vec[pc] = -rows[idx][fc]
        basis.append(vec)
    return basis


def mat_vec(M: RMatrix, x) -> list[Fraction]:
    return [sum((row[j] * x[j] for j in range(M.ncols)), Fraction(0))
            for row in M.rows]


def is_square_fraction(q: Fraction):
    """Rational square root of q if one exists, else None."""
    if q < 0:
        return None
    pn, pd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if pn * pn == q.numerator and pd * pd == q.denominator:
        return Fraction(pn, pd)
    return None


def rank_one_factor(M: RMatrix):
    """For square symmetric M of rank exactly 1, return (u, w) with M = u*w^T.

    When the pivot diagonal entry is a rational square the factorization is
    symmetric (w = u); otherwise u is the pivot column and w = u / pivot.
    Returns None when rank(M) != 1.
    """
    if M.nrows != M.ncols:
        raise ValueError("matrix must be square")
    if M.rows != M.transpose().rows:
        raise ValueError("matrix must be symmetric")
    if rank(M) != 1:
        return None
    p = next(i for i in range(M.nrows) if M.rows[i][i] != 0)
    d = M.rows[p][p]
    u = M.col(p)
    root = is_square_fraction(d)
    if root is not None:
        u = [x / root for x in u]
        return u, list(u)
    return u, [x / d for x in u]


class FractionSpan:
    """Incrementally built row space over the rationals.

    Rows are kept in reduced echelon form with unit pivots, so membership
    tests and rank queries are exact and cheap after each insertion.
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots = []       # sorted list of (pivot_col, row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row):
        """Residual of row after elimination against the current span."""
        row = [Fraction(x) for x in row]
        for c, prow in self.pivots:
            f = row[c]
            if f:
                for j in range(c, self.width):
                    row[j] -= f * prow[j]
        return row

    def contains(self, row) -> bool:
        return not any(self.reduce(row))

    def insert(self, row) -> bool:
        """Add row to the span; True if the rank grew."""
        row = self.reduce(row)
        for c in range(self.width):
            if row[c]:
                pv = row[c]
                for j in range(c, self.width):
                    row[j] /= pv
                for pc, prow in self.pivots:
                    f = prow[c]
                    if f:
                        for j in range(c, self.width):
                            prow[j] -= f * row[j]
                self.pivots.append((c, row))
                self.pivots.sort(key=lambda t: t[0])
                return True
        return False


class IntSpan:
    """Row space of integer vectors, kept as a gcd-reduced integer echelon.

    Faster than FractionSpan for the big sampled-span ranks; results agree
    exactly (both are exact).
    """

    def __init__(self, width: int):
        self.width = width
        self.pivots = []       # sorted list of (pivot_col, row of int)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row):
        row = list(row)
        for c, prow in self.pivots:
            rj = row[c]
            if rj:
                pj = prow[c]
                g = math.gcd(pj, rj)
                a, b = pj // g, rj // g
                for j in range(c, self.width):
                    row[j] = a * row[j] - b * prow[j]
                g = 0
                for x in row:
                    g = math.gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    row = [x // g for x in row]
        return row

    def contains(self, row) -> bool:
        return not any(self._reduce(row))

    def insert(self, row) -> bool:
        row = self._reduce(row)
        for c in range(self.width):
            if row[c]:
                if row[c] < 0:
                    row = [-x for x in row]
                self.pivots.append((c, row))
                self.pivots.sort(key=lambda t: t[0])
                return True
        return False
