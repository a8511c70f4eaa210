"""Command-line client for the arrangement computations.

All real work happens in the service layer; the CLI translates flags into the
same request models the HTTP API accepts, dispatches them either in-process
(default) or to a running service (``--server URL``), and renders the typed
responses as text, JSON, or LaTeX.

Exit codes: 0 success or verification pass, 1 verification failure,
2 input error (malformed files, bad flags, limits exceeded, unreachable
server).
"""

from __future__ import annotations

import json as jsonlib
import sys
from typing import Callable

import click
from pydantic import BaseModel, ValidationError

from . import __version__
from .arrangement import DEFAULT_MAX_FLATS, InputError, load_arrangement
from .service import handlers, schemas

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _arrangement_spec(path: str | None, family: str | None) -> schemas.ArrangementIn:
    if (path is None) == (family is None):
        raise InputError("give exactly one arrangement source: --file PATH or --family SPEC")
    if family is not None:
        return schemas.ArrangementIn(family=family)
    arr = load_arrangement(path)
    return schemas.ArrangementIn(
        n=arr.n, hyperplanes=[[str(v) for v in h.normal] for h in arr.hyperplanes]
    )


def _invoke(server: str | None, path: str, req: BaseModel) -> BaseModel:
    handler, _req_model, resp_model = handlers.ROUTES[path]
    if server is None:
        return handler(req)
    import httpx

    url = server.rstrip("/") + path
    try:
        resp = httpx.post(url, json=req.model_dump(mode="json"), timeout=120.0)
    except httpx.HTTPError as exc:
        raise InputError(f"cannot reach server at {url}: {exc}") from None
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        raise InputError(f"server rejected the request ({resp.status_code}): {detail}")
    return resp_model.model_validate(resp.json())


def _emit_json(model: BaseModel) -> None:
    click.echo(jsonlib.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True))


def _emit(model: BaseModel, fmt: str, text: Callable[[BaseModel], str], latex: str | None = None) -> None:
    if fmt == "json":
        _emit_json(model)
    elif fmt == "latex":
        if latex is None:
            raise InputError("this subcommand has no LaTeX rendering; use --format text or json")
        click.echo(latex)
    else:
        click.echo(text(model))


def arrangement_options(f):
    f = click.option("--family", help="builtin family spec, e.g. braid:3 or generic:3,5")(f)
    f = click.option(
        "--file", "path", type=click.Path(), help="arrangement file (text or JSON format)"
    )(f)
    return f


def common_options(f):
    f = click.option(
        "--server",
        help="URL of a running hodgecalc service; by default requests run in-process",
    )(f)
    f = click.option(
        "--max-flats",
        type=int,
        default=DEFAULT_MAX_FLATS,
        show_default=True,
        help="abort if the intersection lattice grows beyond this many flats",
    )(f)
    f = click.option(
        "--format",
        "fmt",
        type=click.Choice(["text", "json", "latex"]),
        default="text",
        show_default=True,
    )(f)
    return f


def _guarded(body: Callable[[], int]) -> None:
    try:
        code = body()
    except InputError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    except ValidationError as exc:
        click.echo(f"error: invalid request: {exc}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    sys.exit(code)


@click.group()
@click.version_option(__version__, prog_name="hodgecalc")
def main() -> None:
    """Exact invariants of central hyperplane arrangements.

    Computes intersection lattices, Poincare and characteristic polynomials,
    motivic Chern classes of complements, and the generating function of the
    Hilbert series of all Hodge ideals of the arrangement divisor, with
    verification suites against independent brute-force oracles.
    """


@main.command()
@arrangement_options
@common_options
def lattice(path, family, fmt, max_flats, server):
    """Flats, codimensions, and Mobius values of the intersection lattice."""

    def body() -> int:
        req = schemas.LatticeRequest(arrangement=_arrangement_spec(path, family), max_flats=max_flats)
        resp = _invoke(server, "/lattice", req)

        def text(r) -> str:
            lines = [f"n = {r.n}, d = {r.d}, flats = {len(r.flats)}"]
            for f in r.flats:
                rows = "; ".join(" ".join(str(v) for v in row) for row in f.normal_matrix)
                lines.append(
                    f"codim {f.codim}  mu {f.mu:>4}  hyperplanes {f.hyperplanes}  normals [{rows}]"
                )
            return "\n".join(lines)

        _emit(resp, fmt, text)
        return EXIT_OK

    _guarded(body)


def _polynomial_command(name: str, route: str, help_text: str):
    @main.command(name=name, help=help_text)
    @arrangement_options
    @common_options
    def cmd(path, family, fmt, max_flats, server):
        def body() -> int:
            req = schemas.PolynomialRequest(
                arrangement=_arrangement_spec(path, family), max_flats=max_flats
            )
            resp = _invoke(server, route, req)
            _emit(resp, fmt, lambda r: r.string, latex=getattr(resp, "latex", None))
            return EXIT_OK

        _guarded(body)

    return cmd


poincare = _polynomial_command(
    "poincare", "/poincare", "Poincare polynomial of the arrangement."
)
charpoly = _polynomial_command(
    "charpoly", "/charpoly", "Characteristic polynomial of the arrangement."
)
grothendieck_class = _polynomial_command(
    "class",
    "/class",
    "Class of the complement in the Grothendieck group of varieties, in powers of the hyperplane class.",
)
mc = _polynomial_command(
    "mc", "/mc", "Equivariant motivic Chern class of the complement."
)


@main.command(name="hodge-series")
@arrangement_options
@common_options
@click.option("--ymax", type=int, default=8, show_default=True, help="expansion order in y")
@click.option("--jmax", type=int, default=20, show_default=True, help="expansion order in t")
@click.option("--pmax", type=int, default=6, show_default=True, help="rows of the dimension table")
def hodge_series(path, family, fmt, max_flats, server, ymax, jmax, pmax):
    """Generating function of the Hilbert series of all Hodge ideals."""

    def body() -> int:
        req = schemas.HodgeSeriesRequest(
            arrangement=_arrangement_spec(path, family),
            ymax=ymax,
            jmax=jmax,
            pmax=pmax,
            max_flats=max_flats,
        )
        resp = _invoke(server, "/hodge-series", req)

        def text(r) -> str:
            lines = [f"closed form: {r.closed_form.string}", "series:"]
            lines += [f"  p={p}: {s}" for p, s in enumerate(r.series)]
            lines.append(f"dims (rows p=0..{pmax}, columns j=0..{jmax}):")
            lines += ["  " + ", ".join(str(v) for v in row) for row in r.dims]
            return "\n".join(lines)

        _emit(resp, fmt, text, latex=resp.latex)
        return EXIT_OK

    _guarded(body)


@main.command(name="multiplier-series")
@arrangement_options
@common_options
@click.option("--jmax", type=int, default=20, show_default=True, help="expansion order in t")
def multiplier_series(path, family, fmt, max_flats, server, jmax):
    """Hilbert series of the multiplier ideal of the arrangement divisor."""

    def body() -> int:
        req = schemas.MultiplierSeriesRequest(
            arrangement=_arrangement_spec(path, family), jmax=jmax, max_flats=max_flats
        )
        resp = _invoke(server, "/multiplier-series", req)

        def text(r) -> str:
            return f"{r.series}\ndims: {', '.join(str(v) for v in r.dims)}"

        _emit(resp, fmt, text, latex=resp.latex)
        return EXIT_OK

    _guarded(body)


def _emit_verify(resp, fmt: str) -> int:
    if fmt == "latex":
        raise InputError("verification reports have no LaTeX rendering; use --format text or json")
    if fmt == "json":
        _emit_json(resp)
    else:
        for c in resp.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"[{mark}] {c.name}"
            if c.detail:
                line += f" -- {c.detail}"
            click.echo(line)
        passed = sum(1 for c in resp.checks if c.passed)
        click.echo(f"{resp.title}: {passed}/{len(resp.checks)} checks passed")
    return EXIT_OK if resp.ok else EXIT_VERIFY_FAILED


@main.command(name="verify-snc")
@common_options
@click.option("--n", "n", type=int, required=True, help="ambient dimension")
@click.option("--d", "d", type=int, required=True, help="number of hyperplanes (d <= n)")
@click.option("--pmax", type=int, default=3, show_default=True)
@click.option("--jmax", type=int, default=12, show_default=True)
def verify_snc(fmt, max_flats, server, n, d, pmax, jmax):
    """Check the general-position series against direct monomial counting."""

    def body() -> int:
        req = schemas.VerifySncRequest(n=n, d=d, pmax=pmax, jmax=jmax)
        return _emit_verify(_invoke(server, "/verify/snc", req), fmt)

    _guarded(body)


@main.command(name="verify-multiplier")
@arrangement_options
@common_options
@click.option("--jmax", type=int, default=8, show_default=True)
def verify_multiplier(path, family, fmt, max_flats, server, jmax):
    """Check the multiplier-ideal series against the flat-ideal oracle."""

    def body() -> int:
        req = schemas.VerifyMultiplierRequest(
            arrangement=_arrangement_spec(path, family), jmax=jmax, max_flats=max_flats
        )
        return _emit_verify(_invoke(server, "/verify/multiplier", req), fmt)

    _guarded(body)


@main.command(name="verify-pipeline")
@arrangement_options
@common_options
@click.option("--ymax", type=int, default=8, show_default=True)
def verify_pipeline(path, family, fmt, max_flats, server, ymax):
    """Check the K-theory route against the closed form, coefficientwise."""

    def body() -> int:
        req = schemas.VerifyPipelineRequest(
            arrangement=_arrangement_spec(path, family), ymax=ymax, max_flats=max_flats
        )
        return _emit_verify(_invoke(server, "/verify/pipeline", req), fmt)

    _guarded(body)


@main.command(name="verify-delres")
@arrangement_options
@common_options
def verify_delres(path, family, fmt, max_flats, server):
    """Check the deletion-restriction identity for every hyperplane."""

    def body() -> int:
        req = schemas.VerifyDelresRequest(
            arrangement=_arrangement_spec(path, family), max_flats=max_flats
        )
        return _emit_verify(_invoke(server, "/verify/delres", req), fmt)

    _guarded(body)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the computation service."""
    import uvicorn

    uvicorn.run("hodgecalc.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
