import json

import pytest

from vifdiag import builtin, write_csv


def test_diagnose_builtin_wissel_text(cli):
    code, out, err = cli("diagnose", "--builtin", "wissel", "--response", "D")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "Collinearity diagnosis: n = 17, k = 4, residual df = 13"
    verdicts = [line.split()[-1] for line in lines[5:9]]
    assert verdicts == ["Yes", "Yes", "No", "No"]


def test_diagnose_builtin_kg_verdicts(cli):
    code, out, _ = cli("diagnose", "--builtin", "klein-goldberger",
                       "--response", "C")
    assert code == 0
    verdicts = [line.split()[-1] for line in out.splitlines()[5:9]]
    assert verdicts == ["No", "Yes", "No", "No"]


def test_diagnose_json_format(cli):
    code, out, _ = cli("diagnose", "--builtin", "wissel", "--response", "D",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["overall_troubling"] is True
    assert [d["name"] for d in report["per_variable"]] == [
        "const", "C", "I", "CP",
    ]
    assert report["per_variable"][1]["vif"] == pytest.approx(589.754, rel=1e-3)


def test_diagnose_from_csv_file(cli, tmp_path):
    path = tmp_path / "wissel.csv"
    write_csv(builtin("wissel"), path)
    code, out, _ = cli("diagnose", "--data", str(path), "--response", "D",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["n_obs"] == 17


def test_diagnose_missing_file_names_path(cli):
    code, out, err = cli("diagnose", "--data", "missing.csv", "--response", "D")
    assert code == 1
    assert out == ""
    assert "missing.csv" in err


def test_diagnose_missing_column_named(cli):
    code, _, err = cli("diagnose", "--builtin", "wissel", "--response", "XX")
    assert code == 1
    assert "'XX'" in err


def test_diagnose_bad_alpha(cli):
    code, _, err = cli("diagnose", "--builtin", "wissel", "--response", "D",
                       "--alpha", "2")
    assert code == 1
    assert "alpha" in err


def test_diagnose_collinear_csv_names_column(cli, tmp_path):
    path = tmp_path / "collinear.csv"
    rows = ["x,double_x,y"] + [f"{i},{2 * i},{i % 3}" for i in range(1, 9)]
    path.write_text("\n".join(rows) + "\n")
    code, _, err = cli("diagnose", "--data", str(path), "--response", "y")
    assert code == 1
    assert "double_x" in err


def test_strict_exit_codes(cli):
    code, _, _ = cli("diagnose", "--builtin", "wissel", "--response", "D",
                     "--strict-exit")
    assert code == 2
    # without the flag a troubling verdict still exits 0
    code, _, _ = cli("diagnose", "--builtin", "wissel", "--response", "D")
    assert code == 0


def test_no_intercept_flag(cli):
    code, out, _ = cli("diagnose", "--builtin", "wissel", "--response", "D",
                       "--no-intercept", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["intercept_index"] is None
    assert report["n_params"] == 3


def test_features_subset(cli):
    code, out, _ = cli("diagnose", "--builtin", "wissel", "--response", "D",
                       "--features", "C", "I", "--format", "json")
    assert code == 0
    assert [d["name"] for d in json.loads(out)["per_variable"]] == [
        "const", "C", "I",
    ]


def test_fit_command(cli):
    code, out, _ = cli("fit", "--builtin", "wissel", "--response", "D")
    assert code == 0
    assert "original model" in out
    assert "orthonormal reference model" in out
    assert "R2 = 0.9235" in out
    code, out, _ = cli("fit", "--builtin", "klein-goldberger", "--response", "C",
                       "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["original"]["coefficients"][0] == pytest.approx(18.7021, abs=1e-4)


def test_datasets_command(cli):
    code, out, _ = cli("datasets")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("klein-goldberger")
    assert lines[2].startswith("wissel")
    code, out, _ = cli("datasets", "--format", "json")
    assert code == 0
    assert [d["name"] for d in json.loads(out)] == ["klein-goldberger", "wissel"]


def test_usage_errors_exit_one(cli):
    code, _, err = cli()
    assert code == 1
    assert "usage:" in err
    code, _, err = cli("datasets", "--bogus")
    assert code == 1
    assert "error" in err
    code, _, err = cli("diagnose", "--response", "D")
    assert code == 1
    code, _, err = cli("diagnose", "--builtin", "wissel", "--data", "x.csv",
                       "--response", "D")
    assert code == 1


def test_help_exits_zero(cli):
    code, out, _ = cli("--help")
    assert code == 0
    assert "diagnose" in out
