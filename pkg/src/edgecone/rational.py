"""Exact rational linear algebra on small dense matrices.

Everything here works over ``int`` and ``fractions.Fraction`` only; no
floating point is used anywhere in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Rational = int | Fraction


def dot(u: Sequence[Rational], v: Sequence[Rational]) -> Rational:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def primitive(vector: Sequence[Rational]) -> tuple[int, ...]:
    """Smallest integer vector with the same direction.

    The result has coprime nonzero entries and keeps the sign of the
    input (no orientation flip).
    """
    if not any(vector):
        raise ValueError("zero vector has no primitive form")
    scale = math.lcm(*(Fraction(c).denominator for c in vector))
    ints = [int(c * scale) for c in vector]
    g = math.gcd(*ints)
    return tuple(c // g for c in ints)


def is_primitive(vector: Sequence[Rational]) -> bool:
    return any(vector) and tuple(vector) == primitive(vector)


def _integer_rows(vectors: Sequence[Sequence[Rational]]) -> list[list[int]]:
    """Clear denominators row by row (rank-preserving), dropping zero rows."""
    rows = []
    for v in vectors:
        if any(v):
            if all(type(c) is int for c in v):
                rows.append(list(v))
            else:
                scale = math.lcm(*(Fraction(c).denominator for c in v))
                rows.append([int(c * scale) for c in v])
    return rows


def rational_rank(vectors: Sequence[Sequence[Rational]]) -> int:
    """Rank over the rationals via exact fraction-free elimination."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return 0
    ncols = len(vecs[0])
    for v in vecs:
        if len(v) != ncols:
            raise ValueError(f"dimension mismatch: {len(v)} vs {ncols}")
    rows = _integer_rows(vecs)

    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col]
            if f:
                p = lead[col]
                new = [p * a - f * b for a, b in zip(rows[i], lead)]
                g = math.gcd(*new)
                rows[i] = [c // g for c in new] if g > 1 else new
        rank += 1
        col += 1
    return rank


def rref(rows: Sequence[Sequence[Rational]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.

    Returns the nonzero rows (leading coefficient 1, pivot columns
    cleared elsewhere) and the list of pivot column indices.
    """
    mat = [[Fraction(c) for c in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [c * inv for c in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence[Rational]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right kernel {x : A x = 0} of an ``ncols``-column matrix."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, piv in zip(reduced, pivots):
            vec[piv] = -row[free]
        basis.append(tuple(vec))
    return basis


def reduce_against(vector: Sequence[Rational],
                   reduced: Sequence[Sequence[Fraction]],
                   pivots: Sequence[int]) -> tuple[Fraction, ...]:
    """Canonical representative of ``vector`` modulo the row space of an
    already-reduced matrix: entries at the pivot columns are eliminated."""
    vec = [Fraction(c) for c in vector]
    for row, piv in zip(reduced, pivots):
        f = vec[piv]
        if f:
            vec = [a - f * b for a, b in zip(vec, row)]
    return tuple(vec)
