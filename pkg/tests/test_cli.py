"""Command-line behavior: happy paths, exit codes, schema-valid JSON."""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from toricdeg import cli
from toricdeg import fixtures as fx
from toricdeg.fixtures import FixtureReport

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def _schema(name: str) -> dict:
    return json.loads((SCHEMAS / name).read_text())


def _write_elliptic(tmp_path: Path):
    ideal = tmp_path / "elliptic.ideal"
    ideal.write_text("vars: x,y,z\ngrading: 1,1,1\ny^2*z - x^3 + x*z^2\n")
    matrix = tmp_path / "elliptic.json"
    matrix.write_text("[[1,1,1],[1,0,3]]\n")
    return str(ideal), str(matrix)


def test_gb_empty_ideal(tmp_path, capsys):
    f = tmp_path / "empty.ideal"
    f.write_text("vars: x,y\n")
    assert cli.main(["gb", "--in", str(f)]) == 0
    out = capsys.readouterr().out
    assert "0 generators" in out


def test_gb_json_matches_schema(tmp_path, capsys):
    ideal, _ = _write_elliptic(tmp_path)
    assert cli.main(["gb", "--in", ideal, "--json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    payload = json.loads(lines[-1])
    jsonschema.validate(payload, _schema("ideal.schema.json"))


def test_initial_weight(tmp_path, capsys):
    ideal, _ = _write_elliptic(tmp_path)
    assert cli.main(["initial", "--in", ideal, "--w", "1,0,3", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    jsonschema.validate(payload, _schema("ideal.schema.json"))
    assert payload["gens"] == ["x^3 - y^2*z"]


def test_family_and_fiber(tmp_path, capsys):
    ideal, _ = _write_elliptic(tmp_path)
    assert cli.main(["family", "--in", ideal, "--w", "1,0,3"]) == 0
    out = capsys.readouterr().out
    assert "t^4" in out
    assert cli.main(["fiber", "--in", ideal, "--w", "1,0,3", "--t0", "0"]) == 0
    out = capsys.readouterr().out
    assert "x^3 - y^2*z" in out


def test_toric_command(tmp_path, capsys):
    m = tmp_path / "tc.json"
    m.write_text("[[1,1,1,1],[3,2,1,0]]\n")
    assert cli.main(["toric", "--matrix", str(m),
                     "--names", "u3,u2,u1,u0", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    jsonschema.validate(payload, _schema("ideal.schema.json"))
    assert len(payload["gens"]) == 3


def test_pipeline_json_schema(tmp_path, capsys):
    ideal, matrix = _write_elliptic(tmp_path)
    assert cli.main(["pipeline", "--in", ideal, "--matrix", matrix]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    jsonschema.validate(payload, _schema("pipeline.schema.json"))
    assert payload["binomial_prime"] is True


def test_degenerate_alias(tmp_path, capsys):
    ideal, matrix = _write_elliptic(tmp_path)
    assert cli.main(["degenerate", "--in", ideal, "--matrix", matrix]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    assert payload["binomial_prime"] is True


def test_embed_json_schema(tmp_path, capsys):
    ideal, matrix = _write_elliptic(tmp_path)
    assert cli.main(["embed", "--in", ideal, "--matrix", matrix,
                     "--degree-bound", "4"]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    jsonschema.validate(payload, _schema("embedding.schema.json"))
    assert payload["N"] == 3


def test_project_twisted_cubic(tmp_path, capsys):
    f = tmp_path / "tc.ideal"
    f.write_text("vars: u3,u2,u1,u0\ngrading: 1,1,1,1\n"
                 "u2^2 - u3*u1\nu1^2 - u2*u0\nu2*u1 - u3*u0\n")
    assert cli.main(["project", "--in", str(f), "--keep", "u3,u2,u0"]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    jsonschema.validate(payload, _schema("projection.schema.json"))
    assert payload["cone_part"]["gens"] == ["1"]
    assert payload["scheme_check"] is True


def test_moment_json_and_svg(tmp_path, capsys):
    m = tmp_path / "w.json"
    m.write_text("[[1,0,3]]\n")
    svg = tmp_path / "out.svg"
    assert cli.main(["moment", "--matrix", str(m), "--samples", "20",
                     "--seed", "7", "--svg", str(svg)]) == 0
    payload = json.loads(capsys.readouterr().out.strip())
    jsonschema.validate(payload, _schema("samples.schema.json"))
    assert len(payload["samples"]) == 20
    assert svg.exists() and svg.read_text().startswith("<?xml")


def test_fixture_run_single(capsys):
    assert cli.main(["fixtures", "run", "hyperbola", "--json"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] hyperbola:limit" in out
    payload = json.loads(out.strip().splitlines()[-1])
    jsonschema.validate(payload, _schema("fixture_report.schema.json"))


def test_fixtures_run_all_hermetic(capsys):
    # the complete acceptance registry, through the real entry point
    assert cli.main(["fixtures", "run", "all"]) == 0
    out = capsys.readouterr().out
    assert "[FAIL]" not in out
    for name in fx.FIXTURE_NAMES:
        assert f"[PASS] {name}:" in out


def test_fixture_failure_exits_2(monkeypatch, capsys):
    def fake_runner(degree_bound=None):
        rep = FixtureReport("doomed")
        rep.add("always_fails", False, "derived", "0", "1")
        return rep

    monkeypatch.setitem(fx.RUNNERS, "doomed", fake_runner)
    assert cli.main(["fixtures", "run", "doomed"]) == 2
    out = capsys.readouterr().out
    assert "[FAIL] doomed:always_fails" in out


def test_usage_error_exit_1(capsys):
    assert cli.main(["gb"]) == 1


def test_missing_file_exit_1(capsys):
    assert cli.main(["gb", "--in", "/definitely/not/here.ideal"]) == 1
    assert "error:" in capsys.readouterr().err


def test_weight_order_requires_w(tmp_path, capsys):
    ideal, _ = _write_elliptic(tmp_path)
    assert cli.main(["gb", "--in", ideal, "--order", "weight"]) == 1
    err = capsys.readouterr().err
    assert "synopsis" in err
