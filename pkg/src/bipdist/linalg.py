"""Exact linear algebra over the rationals.

Only what the quadric engine needs: a nullspace basis computed by
fraction-free elimination, and the inertia of a symmetric matrix.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_rows(rows):
    out = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        out.append([int(Fraction(v) * den) for v in row])
    return out


def _primitive(row):
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def row_echelon(rows):
    """Fraction-free row echelon form of an integer-scaled copy of ``rows``.

    Returns ``(echelon, pivots)``.  Each elimination step is the
    cross-multiplication ``r <- p*r - f*pivot_row`` followed by removal of
    the row content, so entries stay integers of modest size.
    """
    m = _integer_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = _primitive([p * a - f * b for a, b in zip(m[i], m[r])])
        m[r] = _primitive(m[r])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows, ncols=None):
    """Basis of ``{x : rows @ x = 0}`` as lists of Fractions."""
    if ncols is None:
        ncols = len(rows[0])
    ech, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in zip(ech, pivots):
            vec[pc] = Fraction(-row[f], row[pc])
        basis.append(vec)
    return basis


def rank(rows) -> int:
    return len(row_echelon(rows)[1]) if rows else 0


def inertia(sym):
    """``(positive, negative, zero)`` pivot counts of a symmetric matrix.

    Symmetric Gaussian elimination (congruence transforms only), so by
    Sylvester's law the counts equal the signs of the eigenvalues.
    """
    a = [[Fraction(v) for v in row] for row in sym]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active
                         if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/col i += row/col j makes a[i][i] = 2 a[i][j] (diagonal is zero)
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            k = i
        pk = a[k][k]
        if pk > 0:
            pos += 1
        else:
            neg += 1
        active.remove(k)
        for i in active:
            f = a[i][k] / pk
            if f:
                for c in range(n):
                    a[i][c] -= f * a[k][c]
        for i in active:
            a[k][i] = a[i][k] = Fraction(0)
    return pos, neg, n - pos - neg


def det(mat) -> Fraction:
    a = [[Fraction(v) for v in row] for row in mat]
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[i][j] -= f * a[c][j]
    return result
