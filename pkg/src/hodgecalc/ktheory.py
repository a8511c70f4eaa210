"""The C*-equivariant K-theory of affine space, in Hilbert-series coordinates.

For the scaling action of the torus on C^n, the Grothendieck group of
equivariant coherent sheaves is freely generated by the twists S(q) of the
polynomial ring, and sending a graded module M to (1-t)^n H_M(t) identifies
the group with Z[t, t^-1].  In these coordinates S(q) becomes t^-q, the
lambda_y and s_y operations on graded free modules become explicit products,
Grothendieck-Serre duality becomes the involution

    P(t, y)  ->  (-1)^n t^n P(1/t, 1/y),

and the motivic Chern class of a linear subspace of dimension m becomes
(1-t)^(n-m) (1+ty)^m.  The class of an arrangement complement is then a
mu-weighted sum of subspace classes over the intersection lattice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import IntersectionLattice
from .exactpoly import (
    ONE_MINUS_T_BIV,
    ONE_PLUS_TY,
    BivariatePoly,
    LaurentPoly,
    YSeries,
)
from . import arrangement as _arrangement


def class_of_graded_free(q: int) -> LaurentPoly:
    """Class of the twisted free module S(q): the monomial t^-q."""
    return LaurentPoly.t_power(-q)


def lambda_y_graded(degrees: list[int]) -> BivariatePoly:
    """Alternating exterior-power class of a graded free module.

    A rank-one summand of degree q contributes the factor 1 + t^-q y, and the
    class is multiplicative, so the result is the product over all degrees.
    """
    out = BivariatePoly.one()
    for q in degrees:
        out = out * BivariatePoly({(0, 0): 1, (-q, 1): 1})
    return out


def s_y_graded(degrees: list[int], trunc: int) -> YSeries:
    """Alternating symmetric-power class, as a truncated series in y.

    Inverse of :func:`lambda_y_graded` factor by factor: each degree q
    contributes the expansion of 1/(1 + t^-q y).
    """
    out = YSeries.one(trunc)
    for q in degrees:
        factor = YSeries([1, LaurentPoly.t_power(-q)], trunc)
        out = out * factor.invert()
    return out


def phi_involution(p: BivariatePoly, n: int) -> BivariatePoly:
    """Grothendieck-Serre duality on classes: P(t,y) -> (-1)^n t^n P(1/t, 1/y)."""
    sign = -1 if n % 2 else 1
    return BivariatePoly({(n - a, -b): sign * v for (a, b), v in p.items()})


def mc_linear_subspace(n: int, m: int) -> BivariatePoly:
    """Motivic Chern class of an m-dimensional linear subspace of C^n.

    Push-forward of the smooth-subspace class along the inclusion:
    (1-t)^(n-m) (1+ty)^m.
    """
    if not 0 <= m <= n:
        raise ValueError(f"subspace dimension {m} out of range for ambient {n}")
    return (ONE_MINUS_T_BIV ** (n - m)) * (ONE_PLUS_TY**m)


@dataclass(frozen=True)
class EtaPoly:
    """A class in the Grothendieck group of varieties over C^n.

    Written in the basis of powers of eta, the class of a hyperplane;
    ``coeffs[i]`` is the coefficient of eta^i.
    """

    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = str(abs(c)) if i == 0 else f"{abs(c)}*eta" + (f"^{i}" if i > 1 else "")
            if not parts:
                parts.append(mag if c > 0 else "-" + mag)
            else:
                parts.append(("+ " if c > 0 else "- ") + mag)
        return " ".join(parts) if parts else "0"


def grothendieck_class_complement(lat: IntersectionLattice) -> EtaPoly:
    """Class of the arrangement complement: pi evaluated at -eta."""
    pi = _arrangement.poincare_polynomial(lat)
    return EtaPoly(tuple(c * (-1 if i % 2 else 1) for i, c in enumerate(pi)))


def mc_from_eta_poly(ep: EtaPoly, n: int) -> BivariatePoly:
    """Apply the motivic Chern class to an eta-polynomial.

    eta^i is the class of a codimension-i subspace, so it maps to
    (1-t)^i (1+ty)^(n-i).
    """
    out = BivariatePoly.zero()
    for i, c in enumerate(ep.coeffs):
        if c:
            out = out + mc_linear_subspace(n, n - i) * c
    return out


def mc_complement(lat: IntersectionLattice) -> BivariatePoly:
    """Equivariant motivic Chern class of the arrangement complement.

    Computed as (1-t)^n chi(A, (1+ty)/(1-t)) with the substitution carried
    out term by term over the lattice, so that the cancellation of all
    denominators is structural:

        sum over flats W of  mu(W) (1-t)^codim(W) (1+ty)^dim(W).

    Always equals mc_from_eta_poly(grothendieck_class_complement(lat)).
    """
    n = lat.n
    out = BivariatePoly.zero()
    for f in lat.flats:
        out = out + mc_linear_subspace(n, n - f.codim) * lat.mu(f)
    return out


def lambda_dual_inverse_product(degrees: list[int], trunc: int) -> YSeries:
    """The duality identity for lambda_{1/y}, as a product that must equal 1.

    For a graded free module with the given degrees, the inverse of
    lambda_{1/y} in the Laurent-series ring is det^-1 y^rank s_y(dual), where
    the dual has degrees {-q} and the det^-1 class is t^(sum of degrees).
    Multiplying the y^rank shift into lambda_{1/y} clears all negative powers
    of y, so the identity becomes a power-series statement:

        prod(y + t^-q)  *  t^(sum q)  *  s_y(dual)  =  1.

    Returns the truncated left-hand side.
    """
    lam_inv_shifted = BivariatePoly.one()
    for q in degrees:
        # y^1 * (1 + t^-q y^-1) = y + t^-q
        lam_inv_shifted = lam_inv_shifted * BivariatePoly({(0, 1): 1, (-q, 0): 1})
    det_class = LaurentPoly.t_power(sum(degrees))
    return YSeries.from_bivariate(lam_inv_shifted, trunc) * det_class * s_y_graded(
        [-q for q in degrees], trunc
    )
