"""Request handlers: pure functions from request models to response models.

The FastAPI app and the CLI both call these; the CLI runs them in-process by
default and over HTTP against a running service with ``--server``.  Handlers
raise :class:`hodgecalc.arrangement.InputError` for anything wrong with the
input; the app maps that to a 400 response and the CLI to exit code 2.
"""

from __future__ import annotations

from .. import render, verify
from ..arrangement import (
    Arrangement,
    arrangement_to_json,
    build_lattice,
    char_polynomial,
    family_from_spec,
    parse_arrangement_json,
    poincare_polynomial,
)
from .. import hodge, ktheory
from . import schemas


def resolve_arrangement(spec: schemas.ArrangementIn) -> Arrangement:
    if spec.family is not None:
        return family_from_spec(spec.family)
    return parse_arrangement_json({"n": spec.n, "hyperplanes": spec.hyperplanes})


def _arrangement_out(arr: Arrangement) -> schemas.ArrangementOut:
    return schemas.ArrangementOut(**arrangement_to_json(arr))


def lattice(req: schemas.LatticeRequest) -> schemas.LatticeResponse:
    arr = resolve_arrangement(req.arrangement)
    lat = build_lattice(arr, max_flats=req.max_flats)
    flats = [
        schemas.FlatOut(
            codim=f.codim,
            mu=lat.mu(f),
            hyperplanes=list(f.hyperplanes),
            normal_matrix=[list(row) for row in f.matrix],
        )
        for f in lat.flats
    ]
    return schemas.LatticeResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        flats=flats,
        poincare=poincare_polynomial(lat),
        charpoly=char_polynomial(lat),
    )


def poincare(req: schemas.PolynomialRequest) -> schemas.PoincareResponse:
    arr = resolve_arrangement(req.arrangement)
    coeffs = poincare_polynomial(build_lattice(arr, max_flats=req.max_flats))
    return schemas.PoincareResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        poincare=coeffs,
        string=render.format_int_poly(coeffs),
        latex=render.latex_int_poly(coeffs),
    )


def charpoly(req: schemas.PolynomialRequest) -> schemas.CharpolyResponse:
    arr = resolve_arrangement(req.arrangement)
    coeffs = char_polynomial(build_lattice(arr, max_flats=req.max_flats))
    return schemas.CharpolyResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        charpoly=coeffs,
        string=render.format_int_poly(coeffs),
        latex=render.latex_int_poly(coeffs),
    )


def grothendieck_class(req: schemas.PolynomialRequest) -> schemas.GrothendieckClassResponse:
    arr = resolve_arrangement(req.arrangement)
    ep = ktheory.grothendieck_class_complement(build_lattice(arr, max_flats=req.max_flats))
    return schemas.GrothendieckClassResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        eta_coefficients=list(ep.coeffs),
        string=str(ep),
    )


def mc(req: schemas.PolynomialRequest) -> schemas.McResponse:
    arr = resolve_arrangement(req.arrangement)
    cls = ktheory.mc_complement(build_lattice(arr, max_flats=req.max_flats))
    return schemas.McResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        terms=[[v, a, b] for (a, b), v in cls.items()],
        string=str(cls),
        latex=render.latex_bivariate(cls),
    )


def hodge_series(req: schemas.HodgeSeriesRequest) -> schemas.HodgeSeriesResponse:
    arr = resolve_arrangement(req.arrangement)
    lat = build_lattice(arr, max_flats=req.max_flats)
    result = hodge.hodge_series_result(arr, req.ymax, req.pmax, req.jmax, lat)
    return schemas.HodgeSeriesResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        closed_form=schemas.ClosedFormOut(**render.closed_form_to_dict(result.closed_form)),
        series=render.format_series(result.series),
        dims=result.dims,
        latex=render.latex_closed_form(result.closed_form),
    )


def multiplier_series(req: schemas.MultiplierSeriesRequest) -> schemas.MultiplierSeriesResponse:
    arr = resolve_arrangement(req.arrangement)
    lat = build_lattice(arr, max_flats=req.max_flats)
    series = hodge.multiplier_ideal_series(arr, lat)
    return schemas.MultiplierSeriesResponse(
        arrangement=_arrangement_out(arr),
        n=arr.n,
        d=arr.d,
        series=render.format_ratfunc(series),
        dims=series.expand(req.jmax),
        latex=render.latex_ratfunc(series),
    )


def _verify_response(report: verify.VerificationReport) -> schemas.VerifyResponse:
    return schemas.VerifyResponse(
        title=report.title,
        ok=report.ok,
        checks=[
            schemas.CheckOut(name=c.name, passed=c.passed, detail=c.detail)
            for c in report.checks
        ],
    )


def verify_snc(req: schemas.VerifySncRequest) -> schemas.VerifyResponse:
    return _verify_response(verify.verify_snc(req.n, req.d, req.pmax, req.jmax))


def verify_multiplier(req: schemas.VerifyMultiplierRequest) -> schemas.VerifyResponse:
    arr = resolve_arrangement(req.arrangement)
    return _verify_response(verify.verify_multiplier(arr, req.jmax))


def verify_pipeline(req: schemas.VerifyPipelineRequest) -> schemas.VerifyResponse:
    arr = resolve_arrangement(req.arrangement)
    return _verify_response(verify.verify_pipeline(arr, req.ymax))


def verify_delres(req: schemas.VerifyDelresRequest) -> schemas.VerifyResponse:
    arr = resolve_arrangement(req.arrangement)
    return _verify_response(verify.verify_delres(arr))


# Shared by the CLI client and exercised in tests against the HTTP app.
ROUTES = {
    "/lattice": (lattice, schemas.LatticeRequest, schemas.LatticeResponse),
    "/poincare": (poincare, schemas.PolynomialRequest, schemas.PoincareResponse),
    "/charpoly": (charpoly, schemas.PolynomialRequest, schemas.CharpolyResponse),
    "/class": (grothendieck_class, schemas.PolynomialRequest, schemas.GrothendieckClassResponse),
    "/mc": (mc, schemas.PolynomialRequest, schemas.McResponse),
    "/hodge-series": (hodge_series, schemas.HodgeSeriesRequest, schemas.HodgeSeriesResponse),
    "/multiplier-series": (
        multiplier_series,
        schemas.MultiplierSeriesRequest,
        schemas.MultiplierSeriesResponse,
    ),
    "/verify/snc": (verify_snc, schemas.VerifySncRequest, schemas.VerifyResponse),
    "/verify/multiplier": (verify_multiplier, schemas.VerifyMultiplierRequest, schemas.VerifyResponse),
    "/verify/pipeline": (verify_pipeline, schemas.VerifyPipelineRequest, schemas.VerifyResponse),
    "/verify/delres": (verify_delres, schemas.VerifyDelresRequest, schemas.VerifyResponse),
}
