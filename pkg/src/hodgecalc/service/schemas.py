"""Request and response models for the computation service."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from ..arrangement import DEFAULT_MAX_FLATS
from ..hodge import DEFAULT_JMAX, DEFAULT_PMAX, DEFAULT_TRUNC


class ArrangementIn(BaseModel):
    """An arrangement, given explicitly or as a builtin family spec.

    Explicit form: ``n`` and ``hyperplanes`` (rows of integers or rational
    strings such as ``"1/2"``).  Family form: ``family`` like ``"braid:3"``.
    Exactly one of the two must be supplied.
    """

    n: int | None = None
    hyperplanes: list[list[int | str]] | None = None
    family: str | None = None

    @model_validator(mode="after")
    def _one_source(self) -> "ArrangementIn":
        explicit = self.n is not None or self.hyperplanes is not None
        if explicit == (self.family is not None):
            raise ValueError("give either (n, hyperplanes) or family, not both or neither")
        if explicit and (self.n is None or self.hyperplanes is None):
            raise ValueError("explicit arrangements need both n and hyperplanes")
        return self


class ArrangementOut(BaseModel):
    """Canonical arrangement block; reparsing it reproduces the arrangement."""

    n: int
    hyperplanes: list[list[str]]


class LatticeRequest(BaseModel):
    arrangement: ArrangementIn
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class FlatOut(BaseModel):
    codim: int
    mu: int
    hyperplanes: list[int]
    normal_matrix: list[list[int]]


class LatticeResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    flats: list[FlatOut]
    poincare: list[int]
    charpoly: list[int]


class PolynomialRequest(BaseModel):
    arrangement: ArrangementIn
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class PoincareResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    poincare: list[int]
    string: str
    latex: str


class CharpolyResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    charpoly: list[int]
    string: str
    latex: str


class GrothendieckClassResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    eta_coefficients: list[int]
    string: str


class McResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    terms: list[list[int]]
    string: str
    latex: str


class ClosedFormOut(BaseModel):
    numerator: dict
    d: int
    factors: dict[str, int]
    string: str


class HodgeSeriesRequest(BaseModel):
    arrangement: ArrangementIn
    ymax: int = Field(default=DEFAULT_TRUNC, ge=0)
    jmax: int = Field(default=DEFAULT_JMAX, ge=0)
    pmax: int = Field(default=DEFAULT_PMAX, ge=0)
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class HodgeSeriesResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    closed_form: ClosedFormOut
    series: list[str]
    dims: list[list[int]]
    latex: str


class MultiplierSeriesRequest(BaseModel):
    arrangement: ArrangementIn
    jmax: int = Field(default=DEFAULT_JMAX, ge=0)
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class MultiplierSeriesResponse(BaseModel):
    arrangement: ArrangementOut
    n: int
    d: int
    series: str
    dims: list[int]
    latex: str


class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    title: str
    ok: bool
    checks: list[CheckOut]


class VerifySncRequest(BaseModel):
    n: int = Field(ge=1)
    d: int = Field(ge=1)
    pmax: int = Field(default=3, ge=0)
    jmax: int = Field(default=12, ge=0)


class VerifyMultiplierRequest(BaseModel):
    arrangement: ArrangementIn
    jmax: int = Field(default=8, ge=0)
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class VerifyPipelineRequest(BaseModel):
    arrangement: ArrangementIn
    ymax: int = Field(default=DEFAULT_TRUNC, ge=0)
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class VerifyDelresRequest(BaseModel):
    arrangement: ArrangementIn
    max_flats: int = Field(default=DEFAULT_MAX_FLATS, ge=1)


class HealthResponse(BaseModel):
    status: str
    version: str
