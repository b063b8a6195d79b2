"""Reader for the CSV files the bench CLI dumps."""

import numpy as np

from .errors import BadReport


def load_split_csv(path, target="target"):
    """Returns (X, y) from a headered numeric CSV, target column removed."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    if target not in header:
        raise BadReport(f"column {target!r} not in {path}")
    tcol = header.index(target)
    y = data[:, tcol].copy()
    X = np.delete(data, tcol, axis=1)
    return X, y
