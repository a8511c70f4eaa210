"""Tests for the CLI thin client, in-process and against a live server."""

import json
import socket
import threading
import time

import pytest
from click.testing import CliRunner

from hodgecalc.cli import main
from hodgecalc.arrangement import builtin_family, parse_arrangement_json
from hodgecalc.verify import Check, VerificationReport


@pytest.fixture()
def runner():
    return CliRunner()


def test_poincare_golden_output(runner):
    result = runner.invoke(main, ["poincare", "--family", "boolean:2"])
    assert result.exit_code == 0
    assert result.output == "1 + 2*x + 1*x^2\n"


def test_multiplier_series_golden_output(runner):
    result = runner.invoke(main, ["multiplier-series", "--family", "braid:3", "--jmax", "8"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "t*(2-t) / (1-t)^3"
    assert lines[1] == "dims: 0, 2, 5, 9, 14, 20, 27, 35, 44"


def test_charpoly_and_class_text(runner):
    result = runner.invoke(main, ["charpoly", "--family", "boolean:2"])
    assert result.output.strip() == "1 - 2*x + 1*x^2"
    result = runner.invoke(main, ["class", "--family", "concurrent_lines:3"])
    assert result.output.strip() == "1 - 3*eta + 2*eta^2"


def test_hodge_series_text_and_latex(runner):
    result = runner.invoke(
        main, ["hodge-series", "--family", "boolean:2", "--ymax", "1", "--pmax", "1", "--jmax", "4"]
    )
    assert result.exit_code == 0
    assert "closed form: [1 - 1*t^2*y] / [(1-t)^2 (1-t*y)^2]" in result.output
    assert "p=1: t*(2-t) / (1-t)^2" in result.output
    latex = runner.invoke(
        main, ["hodge-series", "--family", "boolean:2", "--format", "latex"]
    )
    assert latex.output.strip() == "\\frac{1-t^{2}y}{(1-t)^{2}(1-ty)^{2}}"


def test_json_output_roundtrips_and_is_deterministic(runner):
    args = ["lattice", "--family", "braid:3", "--format", "json"]
    first = runner.invoke(main, args)
    second = runner.invoke(main, args)
    assert first.exit_code == 0
    assert first.output == second.output
    body = json.loads(first.output)
    assert parse_arrangement_json(body["arrangement"]) == builtin_family("braid", (3,))
    assert body["poincare"] == [1, 3, 2]


def test_file_input_text_and_json(runner, tmp_path):
    text = tmp_path / "arr.txt"
    text.write_text("# demo\nn: 2\nhyperplanes:\n1 0\n0 1\n1 1\n")
    result = runner.invoke(main, ["poincare", "--file", str(text)])
    assert result.exit_code == 0
    assert result.output.strip() == "1 + 3*x + 2*x^2"

    doc = tmp_path / "arr.json"
    doc.write_text(json.dumps({"n": 2, "hyperplanes": [["1", "0"], ["0", "1"], ["1", "1"]]}))
    result = runner.invoke(main, ["poincare", "--file", str(doc)])
    assert result.output.strip() == "1 + 3*x + 2*x^2"


def test_verify_commands_pass(runner):
    result = runner.invoke(main, ["verify-snc", "--n", "3", "--d", "2", "--pmax", "3", "--jmax", "12"])
    assert result.exit_code == 0
    assert "checks passed" in result.output
    result = runner.invoke(main, ["verify-pipeline", "--family", "concurrent_lines:3", "--ymax", "4"])
    assert result.exit_code == 0
    result = runner.invoke(main, ["verify-multiplier", "--family", "braid:3", "--jmax", "6"])
    assert result.exit_code == 0
    result = runner.invoke(main, ["verify-delres", "--family", "generic:2,4"])
    assert result.exit_code == 0
    assert all("[PASS]" in line for line in result.output.splitlines()[:-1])


def test_verify_failure_exits_one(runner, monkeypatch):
    import hodgecalc.verify as verify_mod

    def failing(arr):
        return VerificationReport(
            title="forced failure",
            checks=(Check(name="always fails", passed=False, detail="forced"),),
        )

    monkeypatch.setattr(verify_mod, "verify_delres", failing)
    result = runner.invoke(main, ["verify-delres", "--family", "braid:3"])
    assert result.exit_code == 1
    assert "[FAIL] always fails -- forced" in result.output


def test_input_errors_exit_two(runner, tmp_path):
    cases = [
        ["poincare"],  # no source
        ["poincare", "--family", "braid:3", "--file", "x.txt"],  # both sources
        ["poincare", "--family", "frobnicate:1"],
        ["hodge-series", "--family", "braid:3", "--format", "text", "--ymax", "-1"],
        ["lattice", "--family", "boolean:3", "--max-flats", "4"],
        ["verify-delres", "--family", "braid:3", "--format", "latex"],
    ]
    for args in cases:
        result = runner.invoke(main, args)
        assert result.exit_code == 2, (args, result.output)

    affine = tmp_path / "affine.txt"
    affine.write_text("n: 2\nhyperplanes:\n1 0 3\n")
    result = runner.invoke(main, ["poincare", "--file", str(affine)])
    assert result.exit_code == 2
    assert "central" in result.output


def test_latex_unsupported_for_lattice(runner):
    result = runner.invoke(main, ["lattice", "--family", "braid:3", "--format", "latex"])
    assert result.exit_code == 2


# ---------------------------------------------------------------------------
# Thin client against a live server
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def live_server():
    import httpx
    import uvicorn

    from hodgecalc.service.app import app

    sock = socket.socket()
    sock.bind(("127.0.0.1", 0))
    port = sock.getsockname()[1]
    sock.close()
    config = uvicorn.Config(app, host="127.0.0.1", port=port, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(target=server.run, daemon=True)
    thread.start()
    url = f"http://127.0.0.1:{port}"
    deadline = time.time() + 15
    while time.time() < deadline:
        try:
            if httpx.get(url + "/health", timeout=1.0).status_code == 200:
                break
        except httpx.HTTPError:
            time.sleep(0.05)
    else:
        raise RuntimeError("service did not come up")
    yield url
    server.should_exit = True
    thread.join(timeout=5)


def test_remote_dispatch_matches_local(runner, live_server):
    local = runner.invoke(main, ["poincare", "--family", "generic:2,4"])
    remote = runner.invoke(main, ["poincare", "--family", "generic:2,4", "--server", live_server])
    assert remote.exit_code == 0
    assert remote.output == local.output


def test_remote_verify_and_errors(runner, live_server):
    result = runner.invoke(
        main, ["verify-delres", "--family", "concurrent_lines:3", "--server", live_server]
    )
    assert result.exit_code == 0
    result = runner.invoke(main, ["poincare", "--family", "bad:1", "--server", live_server])
    assert result.exit_code == 2
    assert "unknown family" in result.output
    unreachable = runner.invoke(
        main, ["poincare", "--family", "braid:3", "--server", "http://127.0.0.1:9"]
    )
    assert unreachable.exit_code == 2
