"""Exact rational linear algebra: rank and determinant.

Fraction-free (Bareiss) elimination over integers after clearing row
denominators, so every division is exact and no floating point appears.
Matrix sizes here stay in the low hundreds, which this handles easily.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Number = Fraction | int


def _integer_rows(mat: Sequence[Sequence[Number]]) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns rows and the product of scalings."""
    rows: list[list[int]] = []
    scaling = Fraction(1)
    for row in mat:
        fracs = [Fraction(x) for x in row]
        mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
        scaling *= mult
        rows.append([int(f * mult) for f in fracs])
    return rows, scaling


def _eliminate(rows: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free row echelon reduction in place.

    Returns (rank, sign from row swaps, last pivot value).
    """
    if not rows or not rows[0]:
        return 0, 1, 1
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    sign = 1
    prev = 1
    for col in range(n_cols):
        pivot = None
        for i in range(rank, n_rows):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != rank:
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            sign = -sign
        pv = rows[rank][col]
        rr = rows[rank]
        for i in range(rank + 1, n_rows):
            ri = rows[i]
            f = ri[col]
            # full Bareiss update; the division by the previous pivot is exact
            for j in range(col, n_cols):
                ri[j] = (ri[j] * pv - f * rr[j]) // prev
        prev = pv
        rank += 1
        if rank == n_rows:
            break
    return rank, sign, prev


def rank(mat: Sequence[Sequence[Number]]) -> int:
    rows, _ = _integer_rows(mat)
    r, _, _ = _eliminate(rows)
    return r


def det(mat: Sequence[Sequence[Number]]) -> Fraction:
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    rows, scaling = _integer_rows(mat)
    r, sign, last_pivot = _eliminate(rows)
    if r < n:
        return Fraction(0)
    return Fraction(sign * last_pivot) / scaling


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    """Integer matrix product (used to restrict boundary maps to subspaces)."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    bt = [[b[k][j] for k in range(inner)] for j in range(cols)]
    out = []
    for row in a:
        assert len(row) == inner
        out.append([sum(row[k] * col[k] for k in range(inner)) for col in bt])
    return out
