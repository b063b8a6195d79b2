"""Row-wise diff of a primary report against a baseline report."""

from dataclasses import asdict, dataclass, field
from typing import Optional

from .baselines import GATED_MODELS, parse_model
from .errors import KeyMismatch
from .report import flatten_metrics


@dataclass
class ComparisonRow:
    dataset: str
    model: str
    time_primary_ms: Optional[float]
    time_baseline_ms: Optional[float]
    speed_ratio: Optional[float]  # baseline time over primary time
    metric_deltas: dict = field(default_factory=dict)
    # True/False for exact-solver rows, None where equality is not expected
    within_tolerance: Optional[bool] = None

    def to_dict(self):
        return asdict(self)


def compare_reports(primary, baseline, rtol=1e-6, atol=1e-9):
    """Pair rows on (dataset, model) and diff them.

    Exact solvers (closed-form regression models) get a tolerance
    verdict on their metric deltas; iterative and instance models have
    legitimately different optimizers on each side, so their deltas are
    reported with within_tolerance left None. Timings inform
    speed_ratio and never gate. Key sets must match exactly.
    """
    index_p = {(r["dataset"], r["model"]): r for r in primary}
    index_b = {(r["dataset"], r["model"]): r for r in baseline}
    if index_p.keys() != index_b.keys():
        only_p = sorted(index_p.keys() - index_b.keys())
        only_b = sorted(index_b.keys() - index_p.keys())
        raise KeyMismatch(
            f"unmatched rows: only_primary={only_p} only_baseline={only_b}")
    rows = []
    for r in primary:
        key = (r["dataset"], r["model"])
        rp, rb = index_p[key], index_b[key]
        tp, tb = rp["training_time_ms"], rb["training_time_ms"]
        ratio = (tb / tp) if (tp and tb) else None
        mp = flatten_metrics(rp["metrics"])
        mb = flatten_metrics(rb["metrics"])
        deltas = {k: mb[k] - mp[k] for k in sorted(mp.keys() & mb.keys())}
        verdict = None
        if parse_model(r["model"])[0] in GATED_MODELS:
            verdict = all(
                abs(d) <= atol + rtol * abs(mp[k]) for k, d in deltas.items())
        rows.append(ComparisonRow(
            dataset=key[0], model=key[1],
            time_primary_ms=tp, time_baseline_ms=tb, speed_ratio=ratio,
            metric_deltas=deltas, within_tolerance=verdict))
    return rows


def summarize(rows):
    gated = [r for r in rows if r.within_tolerance is not None]
    failed = [f"{r.dataset}/{r.model}" for r in gated if not r.within_tolerance]
    ratios = [r.speed_ratio for r in rows if r.speed_ratio is not None]
    return {
        "rows": len(rows),
        "gated_rows": len(gated),
        "gated_failed": failed,
        "passed": not failed,
        "mean_speed_ratio": (sum(ratios) / len(ratios)) if ratios else None,
    }
