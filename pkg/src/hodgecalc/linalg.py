"""Exact linear algebra over the rationals.

Small dense routines on lists of :class:`fractions.Fraction` rows: reduced
row echelon form, rank, nullspaces, rowspace membership, and subspace
intersection.  Matrices here are tiny (normals of hyperplanes, graded pieces
of polynomial rings at desk scale), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Row = list[Fraction]


def _as_fractions(rows: Sequence[Sequence]) -> list[Row]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> list[Row]:
    """Reduced row echelon form; zero rows are dropped.

    The result is canonical for the rowspace: two spanning sets have the same
    rowspace iff their RREFs are identical.
    """
    m = _as_fractions(rows)
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[pivot_row], m[pivot] = m[pivot], m[pivot_row]
        pv = m[pivot_row][col]
        m[pivot_row] = [x / pv for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [row for row in m[:pivot_row]]


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows))


def primitive_integer_rows(rows: Sequence[Row]) -> tuple[tuple[int, ...], ...]:
    """Scale each rational row to a primitive integer vector.

    Rows coming from an RREF have leading coefficient 1, so the scaled rows
    keep a positive leading entry and the result is canonical.
    """
    out = []
    for row in rows:
        denom_lcm = 1
        for x in row:
            denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
        ints = [int(x * denom_lcm) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(tuple(ints))
    return tuple(out)


def reduce_against(vector: Sequence, rref_rows: Sequence[Row]) -> Row:
    """Residual of a vector after elimination against RREF rows."""
    v = [Fraction(x) for x in vector]
    for row in rref_rows:
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is not None and v[lead] != 0:
            f = v[lead] / row[lead]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_rowspace(vector: Sequence, rref_rows: Sequence[Row]) -> bool:
    return all(x == 0 for x in reduce_against(vector, rref_rows))


def kernel(rows: Sequence[Sequence]) -> list[Row]:
    """Basis of the right nullspace {x : M x = 0}."""
    m = _as_fractions(rows)
    if not m:
        return []
    ncols = len(m[0])
    red = rref(m)
    pivots: dict[int, Row] = {}
    for row in red:
        lead = next(j for j, x in enumerate(row) if x != 0)
        pivots[lead] = row
    free_cols = [j for j in range(ncols) if j not in pivots]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for lead, row in pivots.items():
            v[lead] = -row[fc]
        basis.append(v)
    return basis


def left_kernel(rows: Sequence[Sequence]) -> list[Row]:
    """Basis of {x : x^T M = 0}."""
    m = _as_fractions(rows)
    if not m:
        return []
    transpose = [[m[r][c] for r in range(len(m))] for c in range(len(m[0]))]
    return kernel(transpose)


def intersect_rowspaces(a_rows: Sequence[Row], b_rows: Sequence[Row]) -> list[Row]:
    """Basis (as RREF rows) of the intersection of two rowspaces.

    A vector lies in both spaces iff it is alpha^T A = -beta^T B for some left
    kernel element (alpha, beta) of the stacked matrix; with A of full row
    rank every such element yields a distinct intersection vector.
    """
    a = rref(a_rows)
    b = rref(b_rows)
    if not a or not b:
        return []
    stacked = a + b
    combos = left_kernel(stacked)
    vectors = []
    for combo in combos:
        alpha = combo[: len(a)]
        vec = [sum(alpha[i] * a[i][j] for i in range(len(a))) for j in range(len(a[0]))]
        if any(x != 0 for x in vec):
            vectors.append(vec)
    return rref(vectors)
