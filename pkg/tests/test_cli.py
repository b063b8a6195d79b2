"""End-to-end runs of the bench command line."""

import json

import pytest

from quickml.bench import load_report, models_for_task, validate_reports
from quickml.cli import main
from quickml.datasets import TASK_CLASSIFICATION


def test_run_writes_schema_valid_json(tmp_path):
    out = tmp_path / "rep.json"
    rc = main([
        "run", "--dataset", "synthetic:80x3:regression",
        "--model", "mlr", "--model", "simple",
        "--seed", "5", "--repeats", "3", "--out", str(out),
    ])
    assert rc == 0
    reports = load_report(str(out))
    validate_reports(reports)
    assert [r["model"] for r in reports] == ["mlr", "simple"]
    assert all(r["seed"] == 5 for r in reports)


def test_model_defaults_to_full_task_sweep(tmp_path):
    out = tmp_path / "rep.json"
    rc = main([
        "run", "--dataset", "synthetic:60x2:classification",
        "--repeats", "3", "--out", str(out),
    ])
    assert rc == 0
    models = [r["model"] for r in load_report(str(out))]
    assert models == models_for_task(TASK_CLASSIFICATION)


def test_table_format_prints_to_stdout(capsys):
    rc = main([
        "run", "--dataset", "synthetic:50x2:regression",
        "--model", "mlr", "--repeats", "3", "--format", "table",
    ])
    assert rc == 0
    out = capsys.readouterr().out
    assert "dataset" in out and "mlr" in out and "r2=" in out


def test_repeats_env_var_wins(tmp_path, monkeypatch):
    monkeypatch.setenv("BENCH_REPEATS", "6")
    out = tmp_path / "rep.json"
    rc = main([
        "run", "--dataset", "synthetic:50x2:regression",
        "--model", "mlr", "--repeats", "3", "--out", str(out),
    ])
    assert rc == 0
    assert len(load_report(str(out))[0]["timings_ms"]) == 6


def test_dump_data_and_split(tmp_path):
    out = tmp_path / "rep.json"
    data = tmp_path / "full.csv"
    prefix = tmp_path / "part"
    rc = main([
        "run", "--dataset", "synthetic:80x3:regression",
        "--model", "noop", "--repeats", "3", "--out", str(out),
        "--dump-data", str(data), "--dump-split", str(prefix),
    ])
    assert rc == 0
    assert len(data.read_text().splitlines()) == 81  # header + 80 rows
    train = (tmp_path / "part_train.csv").read_text().splitlines()
    val = (tmp_path / "part_val.csv").read_text().splitlines()
    assert len(train) == 65 and len(val) == 17  # 64/16 split plus headers


def test_compare_identical_metrics_passes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main([
            "run", "--dataset", "synthetic:60x2:classification",
            "--model", "nb", "--seed", "9", "--repeats", "3",
            "--out", str(path),
        ]) == 0
    assert main(["compare", "--a", str(a), "--b", str(b)]) == 0


def test_compare_flags_drift(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["run", "--dataset", "synthetic:60x2:classification",
          "--model", "nb", "--repeats", "3", "--out", str(a)])
    rows = json.loads(a.read_text())
    rows[0]["metrics"]["accuracy"] += 0.3
    b.write_text(json.dumps(rows))
    rc = main(["compare", "--a", str(a), "--b", str(b)])
    assert rc == 1
    assert "accuracy" in capsys.readouterr().out


def test_backends_command(capsys):
    rc = main(["backends"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "active:" in out and "numba" in out


def test_bad_dataset_spec_exits_nonzero(capsys):
    rc = main(["run", "--dataset", "synthetic:5x2:regression",
               "--model", "mlr", "--repeats", "3"])
    assert rc == 2
    assert "SpecInvalid" in capsys.readouterr().err


def test_model_error_noted_but_run_succeeds(tmp_path, capsys):
    out = tmp_path / "rep.json"
    rc = main([
        "run", "--dataset", "synthetic:50x2:regression",
        "--model", "logistic", "--repeats", "3", "--out", str(out),
    ])
    assert rc == 0
    assert "recorded error" in capsys.readouterr().err
    assert load_report(str(out))[0]["error"] is not None
