# tests/test_main.py

import json

import pytest

import config
from main import EXIT_COUNTEREXAMPLE, EXIT_PASS, EXIT_RESOURCE_LIMIT, EXIT_USAGE, RunConfig, build_parser, run


@pytest.fixture(autouse=True)
def restore_limits(monkeypatch):
    # run() pushes its limits into config
    monkeypatch.setattr(config, "max_edges", config.max_edges)
    monkeypatch.setattr(config, "max_nodes", config.max_nodes)


def test_count_prints_the_total(capsys):
    assert run(["count", "--genus", "0", "--edges", "2"]) == EXIT_PASS
    assert json.loads(capsys.readouterr().out) == {"count": 9, "edges": 2, "genus": 0}


def test_count_bivariate_as_csv(capsys):
    assert run(["count", "--edges", "1", "--bivariate", "--format", "csv"]) == EXIT_PASS
    assert capsys.readouterr().out.split() == ["V,F,count", "1,2,1", "2,1,1"]


def test_count_univariate(capsys):
    assert run(["count", "--genus", "1", "--edges", "3", "--univariate"]) == EXIT_PASS
    payload = json.loads(capsys.readouterr().out)
    assert payload["counts"] == [[2, 1], [3, 20]]


def test_count_kinds_are_exclusive(capsys):
    assert run(["count", "--edges", "1", "--bivariate", "--good"]) == EXIT_USAGE
    assert "❌" in capsys.readouterr().err


def test_resource_limit(capsys):
    assert run(["count", "--edges", "9"]) == EXIT_RESOURCE_LIMIT
    assert "resource limit" in capsys.readouterr().err


def test_max_edges_flag_lowers_the_bound():
    assert run(["count", "--edges", "3", "--max-edges", "2"]) == EXIT_RESOURCE_LIMIT


@pytest.mark.parametrize("argv", [
    [],
    ["draw"],
    ["count", "--genus", "-1"],
    ["count", "--order", "0"],
    ["verify", "everything"],
    ["series", "M1", "--order", "3"],
])
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


def test_config_file_and_flags(tmp_path, capsys):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"edges": 3, "genus": 0}))
    assert run(["count", "--config", str(path)]) == EXIT_PASS
    assert json.loads(capsys.readouterr().out)["count"] == 54
    # flags win over the file
    assert run(["count", "--config", str(path), "--edges", "2"]) == EXIT_PASS
    assert json.loads(capsys.readouterr().out)["count"] == 9


def test_config_file_errors(tmp_path):
    bad_key = tmp_path / "bad.json"
    bad_key.write_text(json.dumps({"colour": "red"}))
    assert run(["count", "--config", str(bad_key)]) == EXIT_USAGE
    not_json = tmp_path / "broken.json"
    not_json.write_text("{edges: 3")
    assert run(["count", "--config", str(not_json)]) == EXIT_USAGE
    assert run(["count", "--config", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_run_config_defaults():
    args = build_parser().parse_args(["verify", "radial"])
    settings = RunConfig.from_args(args)
    assert settings.target == "radial"
    assert settings.order == config.default_order
    assert settings.height_bound == 3
    assert not settings.check_oracle


def test_verify_radial(capsys):
    assert run(["verify", "radial", "--edges", "2"]) == EXIT_PASS
    (report,) = json.loads(capsys.readouterr().out)
    assert report["passed"] and report["checked"] > 0


def test_verify_motzkin_as_text(capsys):
    assert run(["verify", "motzkin", "--order", "4", "--format", "text"]) == EXIT_PASS
    assert "✅ PASS" in capsys.readouterr().out


def test_series_of_trees(capsys):
    assert run(["series", "T", "--order", "4", "--check-oracle"]) == EXIT_PASS
    lines = capsys.readouterr().out.splitlines()
    black = json.loads(lines[0])
    assert black["name"] == "T_black"
    assert black["diagonal"] == [1, 3, 18, 135]
    assert json.loads(lines[-1])[0]["passed"]


def test_series_of_bridges(capsys):
    assert run(["series", "Buni", "--order", "2"]) == EXIT_PASS
    payload = json.loads(capsys.readouterr().out)
    assert payload["terms"] == [[0, 1, 1], [1, 4, 1], [2, 18, 1]]
    assert "rational" in payload


def test_failed_check_exits_with_one(monkeypatch, capsys):
    from models.verification import VerificationReport

    def broken(*_args, **_kwargs):
        report = VerificationReport("radial", checked=1)
        report.fail("mismatch", witness=0)
        return report

    monkeypatch.setattr("main.verify_radial", broken)
    assert run(["verify", "radial"]) == EXIT_COUNTEREXAMPLE
    assert "❌ radial: mismatch" in capsys.readouterr().err
