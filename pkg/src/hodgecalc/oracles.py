"""Independent brute-force verifiers for the series computations.

Two oracles, both deliberately ignorant of the generating-function formulas:

* For d <= n coordinate-like hyperplanes in general position the Hodge
  filtration has an explicit monomial basis: Laurent monomials whose first d
  exponents satisfy sum(min(b_i, -1)) >= -(d+p) and whose remaining exponents
  are nonnegative.  Counting lattice points in that region, degree by degree,
  gives the graded dimensions of the filtration, and a monomial degree shift
  by d(p+1) turns them into dimensions of the Hodge ideals.

* The multiplier ideal of an arrangement is an intersection of powers of the
  ideals of the flats; at coefficient just below one the relevant exponent
  for a flat W containing a_W hyperplanes is max(0, a_W - codim W).  Graded
  pieces of those powers are spanned by explicit products of linear forms,
  and the intersection is computed by exact rank computations over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Callable, Sequence

from . import linalg
from .arrangement import Arrangement, Flat, InputError, IntersectionLattice, build_lattice


def snc_fp_dimension(n: int, d: int, p: int, degree: int) -> int:
    """Dimension of the degree-``degree`` piece of the p-th filtration step.

    Counts integer vectors b of length n with b_i >= 0 for i > d,
    sum(min(b_i, -1), i <= d) >= -(d+p), and sum(b_i) = degree.  The first d
    coordinates are enumerated directly over a provably complete window
    (each is >= -(p+1) since the other constrained coordinates contribute at
    most -1 each, and bounded above by the degree left over when the others
    sit at their minimum); the remaining coordinates form a free simplex
    counted by binomials.
    """
    if not 1 <= d <= n:
        raise InputError(f"monomial count needs 1 <= d <= n, got d={d}, n={n}")
    if p < 0:
        raise InputError("filtration index p must be nonnegative")
    lo = -(p + 1)
    free = n - d
    total = 0

    def rec(i: int, degree_left: int, min_sum: int) -> None:
        nonlocal total
        if min_sum - (d - i) < -(d + p):
            return  # even all-(-1) tails cannot satisfy the constraint
        if i == d:
            if free == 0:
                total += 1 if degree_left == 0 else 0
            elif degree_left >= 0:
                total += comb(degree_left + free - 1, free - 1)
            return
        hi = degree_left - (d - 1 - i) * lo
        for b in range(lo, hi + 1):
            rec(i + 1, degree_left - b, min_sum + min(b, -1))

    rec(0, degree, 0)
    return total


def snc_ideal_dims(n: int, d: int, p: int, j_max: int) -> list[int]:
    """Graded dimensions of the p-th Hodge ideal in the general-position case.

    The ideal is the filtration step twisted by the divisor, which shifts
    degrees by d(p+1): dim (I_p)_j equals the filtration count at j - d(p+1).
    """
    if j_max < 0:
        raise InputError("j_max must be nonnegative")
    shift = d * (p + 1)
    return [snc_fp_dimension(n, d, p, j - shift) for j in range(j_max + 1)]


# ---------------------------------------------------------------------------
# Multiplier-ideal oracle
# ---------------------------------------------------------------------------


def _times_linear_form(poly: dict[tuple[int, ...], Fraction], form: Sequence[int]) -> dict:
    out: dict[tuple[int, ...], Fraction] = {}
    for mono, c in poly.items():
        for k, coeff in enumerate(form):
            if coeff:
                key = tuple(e + (1 if idx == k else 0) for idx, e in enumerate(mono))
                out[key] = out.get(key, Fraction(0)) + c * coeff
    return {k: v for k, v in out.items() if v}


def monomials(n: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the monomials of the given total degree."""
    if degree < 0:
        return []
    if n == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix: tuple[int, ...], left: int) -> None:
        if len(prefix) == n - 1:
            out.append(prefix + (left,))
            return
        for e in range(left + 1):
            rec(prefix + (e,), left - e)

    rec((), degree)
    return out


def ideal_power_graded_basis(
    forms: Sequence[Sequence[int]], e: int, j: int, n: int
) -> list[list[Fraction]]:
    """Basis (RREF rows over the degree-j monomial basis) of (I^e)_j.

    I is generated by the given independent linear forms, so its e-th power
    in degree j is spanned by the e-fold products of generators times the
    monomials of degree j - e.
    """
    if e == 0:
        raise ValueError("use the full graded piece directly for e = 0")
    if j < e:
        return []
    basis_monos = monomials(n, j)
    index = {m: i for i, m in enumerate(basis_monos)}
    rows = []
    for combo in combinations_with_replacement(forms, e):
        prod: dict[tuple[int, ...], Fraction] = {tuple([0] * n): Fraction(1)}
        for form in combo:
            prod = _times_linear_form(prod, form)
        for mono in monomials(n, j - e):
            row = [Fraction(0)] * len(basis_monos)
            for pm, c in prod.items():
                shifted = tuple(a + b for a, b in zip(pm, mono))
                row[index[shifted]] = c
            rows.append(row)
    return linalg.rref(rows)


def multiplier_flat_exponents(lat: IntersectionLattice) -> list[tuple[Flat, int]]:
    """Flats with their multiplier exponents max(0, a_W - codim W), nonzero only."""
    out = []
    for f in lat.flats:
        if f.codim == 0:
            continue
        e = max(0, len(f.hyperplanes) - f.codim)
        if e:
            out.append((f, e))
    return out


def multiplier_oracle_dims(
    arr: Arrangement,
    j_max: int,
    lattice: IntersectionLattice | None = None,
    forms_for_flat: Callable[[Flat], Sequence[Sequence[int]]] | None = None,
) -> list[int]:
    """Graded dimensions of the multiplier ideal, from flat data alone.

    Intersects, degree by degree, the graded pieces of I_W^{e_W} over all
    flats with positive exponent, where I_W is generated by the defining
    linear forms of W.  ``forms_for_flat`` may supply alternative generating
    forms (spanning the same space) -- the result must not depend on that
    choice.
    """
    if j_max < 0:
        raise InputError("j_max must be nonnegative")
    if arr.d == 0:
        raise InputError("the arrangement has no hyperplanes: no multiplier ideal to compute")
    lat = lattice if lattice is not None else build_lattice(arr)
    n = arr.n
    pieces = [
        ((forms_for_flat(f) if forms_for_flat else f.matrix), e)
        for f, e in multiplier_flat_exponents(lat)
    ]
    dims = []
    for j in range(j_max + 1):
        full = comb(j + n - 1, n - 1)
        if not pieces:
            dims.append(full)
            continue
        current: list[list[Fraction]] | None = None
        for forms, e in pieces:
            basis = ideal_power_graded_basis(forms, e, j, n)
            current = basis if current is None else linalg.intersect_rowspaces(current, basis)
            if not current:
                break
        dims.append(len(current) if current is not None else full)
    return dims


@dataclass(frozen=True)
class ComparisonReport:
    """Element-wise comparison of an oracle run against a series expansion."""

    equal: bool
    first_mismatch: int | None
    oracle: tuple[int, ...]
    series: tuple[int, ...]

    def __str__(self) -> str:
        if self.equal:
            return f"match on all {len(self.oracle)} entries"
        i = self.first_mismatch
        return f"mismatch at index {i}: oracle {self.oracle[i]} vs series {self.series[i]}"


def compare_with_series(oracle_dims: Sequence[int], series_dims: Sequence[int]) -> ComparisonReport:
    if len(oracle_dims) != len(series_dims):
        raise ValueError(
            f"length mismatch: oracle has {len(oracle_dims)} entries, series {len(series_dims)}"
        )
    first = next((i for i, (a, b) in enumerate(zip(oracle_dims, series_dims)) if a != b), None)
    return ComparisonReport(
        equal=first is None,
        first_mismatch=first,
        oracle=tuple(oracle_dims),
        series=tuple(series_dims),
    )
