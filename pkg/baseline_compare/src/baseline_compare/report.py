"""The report contract shared with the bench CLI.

The schema below is this package's copy of the published report format.
It is deliberately duplicated rather than imported: the two packages
share a wire format, not code.
"""

import json

from jsonschema import ValidationError, validate

from .errors import BadReport

REPORT_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "required": [
            "dataset",
            "model",
            "config",
            "timings_ms",
            "training_time_ms",
            "metrics",
            "epochs_run",
            "complexity",
            "seed",
        ],
        "properties": {
            "dataset": {"type": "string"},
            "model": {"type": "string"},
            "config": {"type": "object"},
            "timings_ms": {
                "type": "array",
                "items": {"type": "number", "exclusiveMinimum": 0},
            },
            "training_time_ms": {"type": ["number", "null"]},
            "metrics": {"type": "object"},
            "epochs_run": {"type": ["integer", "null"]},
            "complexity": {"type": "integer", "minimum": 0},
            "seed": {"type": "integer"},
            "error": {"type": ["string", "null"]},
        },
        "additionalProperties": False,
    },
}


def validate_report(rows):
    try:
        validate(rows, REPORT_SCHEMA)
    except ValidationError as exc:
        raise BadReport(f"report does not match the shared schema: {exc.message}")


def load_report(path):
    with open(path, "r", encoding="utf-8") as fh:
        rows = json.load(fh)
    validate_report(rows)
    return rows


def flatten_metrics(metrics, prefix=""):
    """Nested metric dicts to dotted scalar keys, non-numerics dropped."""
    flat = {}
    for key, value in metrics.items():
        if isinstance(value, dict):
            flat.update(flatten_metrics(value, prefix + key + "."))
        elif isinstance(value, (int, float)):
            flat[prefix + key] = float(value)
    return flat
