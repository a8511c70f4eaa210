"""FastAPI application exposing the arrangement computations."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..arrangement import InputError
from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="hodgecalc",
        version=__version__,
        description=(
            "Exact computations for central hyperplane arrangements: intersection "
            "lattices, Poincare/characteristic polynomials, equivariant motivic "
            "Chern classes, Hilbert series of Hodge ideals, and verification "
            "suites against brute-force oracles."
        ),
    )

    @app.exception_handler(InputError)
    async def _input_error(_request: Request, exc: InputError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=schemas.HealthResponse)
    def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/lattice", response_model=schemas.LatticeResponse)
    def lattice(req: schemas.LatticeRequest) -> schemas.LatticeResponse:
        return handlers.lattice(req)

    @app.post("/poincare", response_model=schemas.PoincareResponse)
    def poincare(req: schemas.PolynomialRequest) -> schemas.PoincareResponse:
        return handlers.poincare(req)

    @app.post("/charpoly", response_model=schemas.CharpolyResponse)
    def charpoly(req: schemas.PolynomialRequest) -> schemas.CharpolyResponse:
        return handlers.charpoly(req)

    @app.post("/class", response_model=schemas.GrothendieckClassResponse)
    def grothendieck_class(req: schemas.PolynomialRequest) -> schemas.GrothendieckClassResponse:
        return handlers.grothendieck_class(req)

    @app.post("/mc", response_model=schemas.McResponse)
    def mc(req: schemas.PolynomialRequest) -> schemas.McResponse:
        return handlers.mc(req)

    @app.post("/hodge-series", response_model=schemas.HodgeSeriesResponse)
    def hodge_series(req: schemas.HodgeSeriesRequest) -> schemas.HodgeSeriesResponse:
        return handlers.hodge_series(req)

    @app.post("/multiplier-series", response_model=schemas.MultiplierSeriesResponse)
    def multiplier_series(req: schemas.MultiplierSeriesRequest) -> schemas.MultiplierSeriesResponse:
        return handlers.multiplier_series(req)

    @app.post("/verify/snc", response_model=schemas.VerifyResponse)
    def verify_snc(req: schemas.VerifySncRequest) -> schemas.VerifyResponse:
        return handlers.verify_snc(req)

    @app.post("/verify/multiplier", response_model=schemas.VerifyResponse)
    def verify_multiplier(req: schemas.VerifyMultiplierRequest) -> schemas.VerifyResponse:
        return handlers.verify_multiplier(req)

    @app.post("/verify/pipeline", response_model=schemas.VerifyResponse)
    def verify_pipeline(req: schemas.VerifyPipelineRequest) -> schemas.VerifyResponse:
        return handlers.verify_pipeline(req)

    @app.post("/verify/delres", response_model=schemas.VerifyResponse)
    def verify_delres(req: schemas.VerifyDelresRequest) -> schemas.VerifyResponse:
        return handlers.verify_delres(req)

    return app


app = create_app()
