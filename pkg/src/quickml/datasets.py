"""Dataset loading, saving, and synthetic generation for the bench harness.

CSV wire format: UTF-8, comma-delimited, one header row, numeric cells,
no quoting. Floats are written with repr-exact precision so a write/read
round trip is bit-identical.
"""

import csv
import os
import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._validate import as_matrix, as_vector, check_paired
from .errors import MissingTargetColumn, NonNumericCell, SpecInvalid
from .rng import Rng

TASK_REGRESSION = "regression"
TASK_CLASSIFICATION = "binary-classification"

_SYNTH_RE = re.compile(r"^synthetic:(\d+)x(\d+):([a-z-]+)$")

# short CLI aliases for the task segment
_TASK_ALIASES = {
    "regression": TASK_REGRESSION,
    "classification": TASK_CLASSIFICATION,
    "binary-classification": TASK_CLASSIFICATION,
}


@dataclass
class DatasetSpec:
    source: str  # csv path or synthetic recipe string
    rows: int
    cols: int  # feature columns, target excluded
    task: str
    target: str = "target"
    seed: int = 0
    noise: float = 0.1  # regression target noise, std units
    separation: float = 10.0  # classification cloud distance, std units

    @property
    def complexity(self) -> int:
        return self.rows * self.cols

    @property
    def is_synthetic(self) -> bool:
        return self.source.startswith("synthetic:")

    @property
    def dataset_id(self) -> str:
        if self.is_synthetic:
            return self.source
        return os.path.basename(self.source)


def parse_dataset_spec(
    text: str,
    target: str = "target",
    seed: int = 0,
    task: str = TASK_REGRESSION,
) -> DatasetSpec:
    """Accepts `synthetic:ROWSxCOLS:task` or a CSV file path.

    A synthetic recipe carries its own task; csv paths take the `task`
    argument since the file itself has no marker. Shape for csv specs is
    discovered at load time.
    """
    m = _SYNTH_RE.match(text)
    if m:
        rows, cols = int(m.group(1)), int(m.group(2))
        recipe_task = _TASK_ALIASES.get(m.group(3))
        if recipe_task is None:
            raise SpecInvalid(f"unknown task {m.group(3)!r}")
        if rows < 10:
            raise SpecInvalid(f"synthetic specs need rows >= 10, got {rows}")
        if cols < 1:
            raise SpecInvalid(f"synthetic specs need cols >= 1, got {cols}")
        return DatasetSpec(source=text, rows=rows, cols=cols, task=recipe_task, seed=seed)
    if text.startswith("synthetic"):
        raise SpecInvalid(f"malformed synthetic recipe {text!r}")
    if task not in (TASK_REGRESSION, TASK_CLASSIFICATION):
        raise SpecInvalid(f"unknown task {task!r}")
    return DatasetSpec(source=text, rows=0, cols=0, task=task, target=target, seed=seed)


def load_csv(path: str, spec: DatasetSpec):
    """Read (X, y) from a headered CSV; `spec.target` names the target column.

    Cell errors report the 0-based data row (header excluded) and column.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SpecInvalid(f"{path} is empty, expected a header row")
        header = [h.strip() for h in header]
        if spec.target not in header:
            raise MissingTargetColumn(
                f"column {spec.target!r} not in header {header}"
            )
        t_idx = header.index(spec.target)
        rows = []
        for r, record in enumerate(reader):
            vals = []
            for c, cell in enumerate(record):
                try:
                    vals.append(float(cell))
                except ValueError:
                    raise NonNumericCell(r, c, header[c], cell)
            rows.append(vals)
    if not rows:
        raise SpecInvalid(f"{path} has a header but no data rows")
    data = np.array(rows, dtype=np.float64)
    y = data[:, t_idx].copy()
    X = np.delete(data, t_idx, axis=1)
    spec.rows = X.shape[0]
    spec.cols = X.shape[1]
    return as_matrix(X), as_vector(y)


def save_csv(path: str, X, y, target: str = "target", feature_names=None):
    """Write (X, y) with a header; floats keep full precision."""
    X = as_matrix(X)
    y = as_vector(y)
    check_paired(X, y)
    p = X.shape[1]
    names = feature_names or [f"f{j}" for j in range(p)]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(list(names) + [target])
        for i in range(X.shape[0]):
            writer.writerow([repr(float(v)) for v in X[i]] + [repr(float(y[i]))])


def synthetic_beta(p: int) -> np.ndarray:
    """The fixed regression coefficients baked into synthetic data.

    Public so tests and external harnesses can verify recovery. A simple
    alternating ramp keeps every coefficient O(1) and nonzero.
    """
    j = np.arange(1, p + 1, dtype=np.float64)
    return np.where(j % 2 == 0, -1.0, 1.0) * (1.0 + j / p)


def generate_synthetic(spec: DatasetSpec, rng: Rng):
    """Deterministic synthetic data for `spec`'s shape and task.

    Regression: X standard normal, y = X beta* + noise * N(0,1) with
    beta* = synthetic_beta(cols). Classification: two Gaussian clouds at
    +-(separation/2) along the unit diagonal, labels 0/1, rows shuffled.
    """
    if spec.rows < 10:
        raise SpecInvalid(f"need rows >= 10, got {spec.rows}")
    if spec.cols < 1:
        raise SpecInvalid(f"need cols >= 1, got {spec.cols}")
    n, p = spec.rows, spec.cols
    if spec.task == TASK_REGRESSION:
        X = rng.normal(n * p).reshape(n, p)
        y = X @ synthetic_beta(p)
        if spec.noise > 0.0:
            y = y + spec.noise * rng.normal(n)
        return X, y
    if spec.task == TASK_CLASSIFICATION:
        half = n // 2
        offset = (spec.separation / 2.0) * (np.ones(p) / np.sqrt(p))
        X = rng.normal(n * p).reshape(n, p)
        y = np.zeros(n)
        X[:half] -= offset
        X[half:] += offset
        y[half:] = 1.0
        perm = rng.permutation(n)
        return X[perm], y[perm]
    raise SpecInvalid(f"unknown task {spec.task!r}")


def load_dataset(spec: DatasetSpec, rng: Optional[Rng] = None):
    """Synthetic specs generate, csv specs load."""
    if spec.is_synthetic:
        return generate_synthetic(spec, rng or Rng(spec.seed))
    return load_csv(spec.source, spec)
