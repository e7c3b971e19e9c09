"""Exact linear algebra over the rationals.

Dense fraction-free (Bareiss) determinants, and a sparse integer
row-elimination for ranks of the large, very sparse matrices arising from
differential operators acting on monomial bases.  No floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def det_bareiss(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination.

    Denominators are cleared row by row first, so the elimination itself
    runs on Python integers.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")

    rows: list[list[int]] = []
    scale = Fraction(1)
    for row in matrix:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        scale /= den
        rows.append([int(x * den) for x in row])

    sign = 1
    prev = 1
    for i in range(n):
        if rows[i][i] == 0:
            for j in range(i + 1, n):
                if rows[j][i] != 0:
                    rows[i], rows[j] = rows[j], rows[i]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for j in range(i + 1, n):
            for c in range(i + 1, n):
                rows[j][c] = (rows[j][c] * rows[i][i] - rows[j][i] * rows[i][c]) // prev
            rows[j][i] = 0
        prev = rows[i][i]
    return sign * scale * rows[n - 1][n - 1]


SparseRow = dict[int, int]


def _normalize(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def rank_sparse(rows: list[dict[int, Fraction]]) -> int:
    """Exact rank of a sparse rational matrix given as rows {col: value}."""
    work: list[SparseRow] = []
    for row in rows:
        entries = {c: Fraction(v) for c, v in row.items() if v != 0}
        if not entries:
            continue
        den = lcm(*(v.denominator for v in entries.values()))
        work.append(_normalize({c: int(v * den) for c, v in entries.items()}))

    rank = 0
    # pivots chosen among the shortest remaining rows to limit fill-in
    while work:
        work.sort(key=len)
        pivot_row = work.pop(0)
        rank += 1
        pivot_col = min(pivot_row, key=lambda c: abs(pivot_row[c]))
        pv = pivot_row[pivot_col]
        nxt: list[SparseRow] = []
        for row in work:
            rv = row.get(pivot_col)
            if rv is None:
                nxt.append(row)
                continue
            g = gcd(pv, rv)
            a, b = pv // g, rv // g
            new: SparseRow = {}
            for c, v in row.items():
                nv = a * v - b * pivot_row.get(c, 0)
                if nv:
                    new[c] = nv
            for c, v in pivot_row.items():
                if c not in row:
                    nv = -b * v
                    if nv:
                        new[c] = nv
            if new:
                nxt.append(_normalize(new))
        work = nxt
    return rank


def nullspace_dim(rows: list[dict[int, Fraction]], ncols: int) -> int:
    """Dimension of the kernel of the matrix acting on ncols coordinates."""
    return ncols - rank_sparse(rows)


def rank_dense(matrix: list[list[Fraction]]) -> int:
    rows = [{j: v for j, v in enumerate(row) if v != 0} for row in matrix]
    return rank_sparse(rows)
