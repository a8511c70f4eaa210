"""Hilbert series of the Hodge ideals of an arrangement divisor.

For a central arrangement of d hyperplanes in C^n with Poincare polynomial
pi, the generating function of the Hilbert series of the Hodge ideals is the
closed form

    t^d / ((1-t)^n (1-t^d y))  *  pi( (1-t) / (t (1-t^(d-1) y)) ),

assembled here over a common denominator so the numerator stays a polynomial.
The same series is computed a second way through the equivariant K-theory
pipeline: take the motivic Chern class of the complement, substitute
y -> -t^-d y^-1, apply the duality involution, multiply by the geometric
factors, and divide by (1-t)^n to convert classes back to Hilbert series.
The two routes agreeing coefficient-for-coefficient is the package's central
cross-check.

The coefficient of y^0 is the Hilbert series of the multiplier ideal,
t^d/(1-t)^n * pi(1/t - 1), and for d <= n hyperplanes in general position the
whole generating function collapses to

    (1-t^d y)^(d-1) / ((1-t)^n (1-t^(d-1) y)^d).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrangement import Arrangement, InputError, IntersectionLattice, build_lattice, poincare_polynomial
from .exactpoly import (
    ONE_MINUS_T_BIV,
    BivariatePoly,
    ClosedForm,
    LaurentPoly,
    RatFunc,
    YSeries,
    one_minus_t_pow_y,
    one_minus_tky_biv,
)
from . import ktheory

DEFAULT_TRUNC = 8
DEFAULT_JMAX = 20
DEFAULT_PMAX = 6


def _require_divisor(arr: Arrangement) -> None:
    if arr.d == 0:
        raise InputError("the arrangement has no hyperplanes: there is no divisor to take Hodge ideals of")


def _lattice(arr: Arrangement, lattice: IntersectionLattice | None) -> IntersectionLattice:
    return lattice if lattice is not None else build_lattice(arr)


def hodge_generating_function(arr: Arrangement, lattice: IntersectionLattice | None = None) -> ClosedForm:
    """Closed form of sum_p H_{I_p}(t) y^p.

    Substitutes x = (1-t)/(t (1-t^(d-1) y)) into the Poincare polynomial term
    by term, over the common denominator t^m (1-t^(d-1) y)^m with m = deg pi,
    and reduces the resulting factored form.
    """
    _require_divisor(arr)
    lat = _lattice(arr, lattice)
    pi = poincare_polynomial(lat)
    m = len(pi) - 1
    n, d = arr.n, arr.d
    num = BivariatePoly.zero()
    for k, b in enumerate(pi):
        if b == 0:
            continue
        term = (ONE_MINUS_T_BIV**k) * (one_minus_tky_biv(d - 1) ** (m - k)) * b
        num = num + term.shifted(m - k, 0)
    num = num.shifted(d, 0)
    cf = ClosedForm(
        num,
        d=d,
        one_minus_t=n,
        one_minus_td_y=1,
        one_minus_td1_y=m,
        t_pow=m,
    )
    return cf.reduced()


def hodge_generating_function_via_mc(
    arr: Arrangement, trunc: int = DEFAULT_TRUNC, lattice: IntersectionLattice | None = None
) -> YSeries:
    """The same generating function through the K-theory pipeline.

    With a = t^d the class of the line bundle of the divisor, the series of
    Hodge-ideal classes is

        (-1)^n a [omega^-1] (1-ay)^-1 s_{-ay}(T) * phi(mC_{-1/(ay)}(complement)),

    where the substitution y -> -t^-d y^-1 is performed on the finite
    bivariate form of the motivic Chern class before the involution phi, the
    tangent factor s_{-ay}(T) expands to (1-t^(d-1) y)^-n, and omega^-1
    contributes t^-n.  Dividing the resulting class series by (1-t)^n turns
    classes into Hilbert series.
    """
    _require_divisor(arr)
    if trunc < 0:
        raise InputError("truncation must be nonnegative")
    lat = _lattice(arr, lattice)
    n, d = arr.n, arr.d
    mc = ktheory.mc_complement(lat)
    substituted = mc.substitute_y_monomial(-1, -d, -1)
    dualized = ktheory.phi_involution(substituted, n)
    sign = -1 if n % 2 else 1
    prefactor = dualized * BivariatePoly.term(sign, d - n, 0)
    series = YSeries.from_bivariate(prefactor, trunc)
    series = series * one_minus_t_pow_y(d, trunc).invert()
    series = series * one_minus_t_pow_y(d - 1, trunc).invert() ** n
    return series.div_one_minus_t_pow(n)


def hilbert_series_of_ideal(
    arr: Arrangement, p: int, lattice: IntersectionLattice | None = None
) -> RatFunc:
    """Hilbert series of the p-th Hodge ideal, read off the closed form."""
    if p < 0:
        raise InputError("the Hodge ideal index p must be nonnegative")
    cf = hodge_generating_function(arr, lattice)
    return cf.expand(p).coeff(p)


def multiplier_ideal_series(arr: Arrangement, lattice: IntersectionLattice | None = None) -> RatFunc:
    """Hilbert series of the multiplier ideal of (1-epsilon) times the divisor.

    Equals t^d/(1-t)^n * pi(1/t - 1), which is also the y = 0 coefficient of
    the Hodge generating function (the zeroth Hodge ideal is the multiplier
    ideal).
    """
    _require_divisor(arr)
    lat = _lattice(arr, lattice)
    pi = poincare_polynomial(lat)
    n, d = arr.n, arr.d
    num = LaurentPoly.zero()
    one_minus_t = LaurentPoly({0: 1, 1: -1})
    for k, b in enumerate(pi):
        if b:
            num = num + (one_minus_t**k).shifted(d - k) * b
    return RatFunc(num, n)


def snc_closed_form(n: int, d: int) -> ClosedForm:
    """Generating function for d <= n hyperplanes in general position."""
    if not 1 <= d <= n:
        raise InputError(f"general-position closed form needs 1 <= d <= n, got d={d}, n={n}")
    num = one_minus_tky_biv(d) ** (d - 1)
    return ClosedForm(num, d=d, one_minus_t=n, one_minus_td1_y=d)


def dims_table(
    arr: Arrangement,
    p_max: int = DEFAULT_PMAX,
    j_max: int = DEFAULT_JMAX,
    lattice: IntersectionLattice | None = None,
) -> list[list[int]]:
    """Graded dimensions dim (I_p)_j for 0 <= p <= p_max, 0 <= j <= j_max.

    Entries are checked to be honest graded dimensions: integers between 0
    and dim S_j; a violation signals an internal inconsistency, not bad input.
    """
    if p_max < 0 or j_max < 0:
        raise InputError("table bounds must be nonnegative")
    _require_divisor(arr)
    n = arr.n
    cf = hodge_generating_function(arr, lattice)
    series = cf.expand(p_max)
    table = []
    for p in range(p_max + 1):
        row = series.coeff(p).expand(j_max)
        for j, v in enumerate(row):
            if not 0 <= v <= comb(j + n - 1, n - 1):
                raise ArithmeticError(
                    f"dim (I_{p})_{j} = {v} outside [0, dim S_{j}] (internal error)"
                )
        table.append(row)
    return table


@dataclass(frozen=True)
class HodgeSeriesResult:
    """Bundle of the closed form, its expansion, and the dimension table."""

    closed_form: ClosedForm
    series: YSeries
    dims: list[list[int]]


def hodge_series_result(
    arr: Arrangement,
    trunc: int = DEFAULT_TRUNC,
    p_max: int = DEFAULT_PMAX,
    j_max: int = DEFAULT_JMAX,
    lattice: IntersectionLattice | None = None,
) -> HodgeSeriesResult:
    lat = _lattice(arr, lattice)
    cf = hodge_generating_function(arr, lat)
    return HodgeSeriesResult(
        closed_form=cf,
        series=cf.expand(trunc),
        dims=dims_table(arr, p_max, j_max, lat),
    )
