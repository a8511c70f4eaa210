"""Verification suites: run the independent oracles against the formulas.

Each suite returns a report with one named check per comparison; a report is
ok only if every check passed.  The suites power the ``verify-*`` CLI
subcommands and the ``/verify/*`` service endpoints, whose exit codes and
payloads distinguish "ran and disagreed" from "could not run".
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hodge, oracles
from .arrangement import (
    Arrangement,
    InputError,
    build_lattice,
    deletion_restriction,
    poincare_polynomial,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    title: str
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_snc(n: int, d: int, p_max: int, j_max: int) -> VerificationReport:
    """Monomial-count oracle vs the closed form, for d <= n in general position."""
    if not 1 <= d <= n:
        raise InputError(f"SNC verification needs 1 <= d <= n, got d={d}, n={n}")
    if p_max < 0 or j_max < 0:
        raise InputError("verification bounds must be nonnegative")
    arrangement = _generic(n, d)
    checks = []
    cf = hodge.hodge_generating_function(arrangement)
    closed_ok = cf.equals_as_function(hodge.snc_closed_form(n, d))
    checks.append(
        Check(
            name=f"closed form for generic({n},{d}) equals general-position formula",
            passed=closed_ok,
        )
    )
    table = hodge.dims_table(arrangement, p_max, j_max)
    for p in range(p_max + 1):
        report = oracles.compare_with_series(oracles.snc_ideal_dims(n, d, p, j_max), table[p])
        checks.append(
            Check(
                name=f"monomial oracle, p={p}, j<={j_max}",
                passed=report.equal,
                detail="" if report.equal else str(report),
            )
        )
    return VerificationReport(title=f"SNC oracle n={n} d={d}", checks=tuple(checks))


def verify_multiplier(arr: Arrangement, j_max: int) -> VerificationReport:
    """Flat-ideal intersection oracle vs the multiplier-ideal Hilbert series."""
    if j_max < 0:
        raise InputError("j_max must be nonnegative")
    lat = build_lattice(arr)
    series_dims = hodge.multiplier_ideal_series(arr, lat).expand(j_max)
    oracle_dims = oracles.multiplier_oracle_dims(arr, j_max, lat)
    report = oracles.compare_with_series(oracle_dims, series_dims)
    y0 = hodge.hilbert_series_of_ideal(arr, 0, lat)
    checks = (
        Check(
            name=f"multiplier oracle vs series, j<={j_max}",
            passed=report.equal,
            detail="" if report.equal else str(report),
        ),
        Check(
            name="y=0 coefficient of generating function equals multiplier series",
            passed=y0 == hodge.multiplier_ideal_series(arr, lat),
        ),
    )
    return VerificationReport(title="multiplier-ideal oracle", checks=checks)


def verify_pipeline(arr: Arrangement, trunc: int) -> VerificationReport:
    """K-theory pipeline vs closed-form expansion, coefficient for coefficient."""
    if trunc < 0:
        raise InputError("truncation must be nonnegative")
    lat = build_lattice(arr)
    direct = hodge.hodge_generating_function(arr, lat).expand(trunc)
    via_mc = hodge.hodge_generating_function_via_mc(arr, trunc, lat)
    checks = []
    for p in range(trunc + 1):
        same = direct.coeff(p) == via_mc.coeff(p)
        checks.append(
            Check(
                name=f"H_(I_{p}) agrees between closed form and K-theory route",
                passed=same,
                detail="" if same else f"closed form {direct.coeff(p)} vs pipeline {via_mc.coeff(p)}",
            )
        )
    return VerificationReport(title=f"pipeline equivalence up to y^{trunc}", checks=tuple(checks))


def verify_delres(arr: Arrangement) -> VerificationReport:
    """Deletion-restriction identity for every choice of removed hyperplane."""
    pi = poincare_polynomial(build_lattice(arr))
    checks = []
    for i in range(arr.d):
        deleted, restricted = deletion_restriction(arr, i)
        pi_del = poincare_polynomial(build_lattice(deleted))
        pi_res = poincare_polynomial(build_lattice(restricted))
        combined = _poly_add(pi_del, [0] + pi_res)
        same = _trim(combined) == _trim(pi)
        checks.append(
            Check(
                name=f"pi(A) = pi(A') + x pi(A'') removing hyperplane {i}",
                passed=same,
                detail="" if same else f"{pi} vs {combined}",
            )
        )
    if not checks:
        checks.append(Check(name="no hyperplanes to remove (empty arrangement)", passed=True))
    return VerificationReport(title="deletion-restriction", checks=tuple(checks))


def _generic(n: int, d: int) -> Arrangement:
    from .arrangement import builtin_family

    return builtin_family("generic", (n, d))


def _poly_add(a: list[int], b: list[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def _trim(a: list[int]) -> list[int]:
    out = list(a)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
