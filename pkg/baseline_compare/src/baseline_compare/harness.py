"""Drives the primary bench CLI, then the reference library, on
byte-identical data.

The primary is consumed strictly through its public surface: the bench
executable, the JSON report it writes, and the train/val CSVs it dumps.
Nothing here imports the primary package.
"""

import os
import shutil
import subprocess

from .baselines import run_baseline
from .csvio import load_split_csv
from .errors import PrimaryCliMissing, PrimaryRunFailed
from .report import load_report, validate_report


def find_bench():
    path = shutil.which("bench")
    if path is None:
        raise PrimaryCliMissing(
            "the 'bench' executable is not on PATH; install the primary package")
    return path


def run_primary(spec, models, seed, repeats, workdir, task=None, target="target"):
    """Run `bench run` with split dumps. Returns (rows, train_csv, val_csv)."""
    os.makedirs(workdir, exist_ok=True)
    out = os.path.join(workdir, "primary.json")
    prefix = os.path.join(workdir, "data")
    cmd = [find_bench(), "run", "--dataset", spec, "--seed", str(seed),
           "--repeats", str(repeats), "--out", out, "--dump-split", prefix]
    if task:
        cmd += ["--task", task]
    if target != "target":
        cmd += ["--target", target]
    for m in models:
        cmd += ["--model", m]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise PrimaryRunFailed(
            f"bench exited {proc.returncode}: {proc.stderr.strip() or proc.stdout.strip()}")
    rows = load_report(out)
    return rows, prefix + "_train.csv", prefix + "_val.csv"


def run_baseline_suite(primary_rows, train_csv, val_csv, repeats, target="target"):
    """One baseline row per successful primary row, same schema."""
    Xtr, ytr = load_split_csv(train_csv, target)
    Xval, yval = load_split_csv(val_csv, target)
    rows = []
    for row in primary_rows:
        if row.get("error"):
            continue  # the primary rejected this model/dataset pairing
        if row["model"] == "noop":
            continue  # harness-overhead probe has no library counterpart
        rows.append(run_baseline(
            row["model"], Xtr, ytr, Xval, yval,
            dataset_id=row["dataset"], seed=row["seed"],
            complexity=row["complexity"], repeats=repeats))
    validate_report(rows)
    return rows
