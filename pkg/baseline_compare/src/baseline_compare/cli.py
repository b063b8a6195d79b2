"""compare: run both sides on identical data and diff the reports.

  compare run --spec synthetic:5000x13:classification --models logistic,svm \
              --seed 3 --repeats 5 --out cmp.json

A missing reference library is recorded in the output file and exits 0;
only metric drift on exact-solver rows (or a hard failure) is nonzero.
"""

import argparse
import json
import sys
import tempfile

from .compare import compare_reports, summarize
from .errors import BaselineUnavailable, CompareError
from .harness import run_baseline_suite, run_primary


def _build_parser():
    parser = argparse.ArgumentParser(prog="compare")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="benchmark both sides and diff")
    run.add_argument("--spec", required=True,
                     help="dataset spec passed straight to the bench CLI")
    run.add_argument("--models", action="append", required=True,
                     help="comma-separated model names, flag repeatable")
    run.add_argument("--task", default=None, help="task for CSV specs")
    run.add_argument("--target", default="target")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--repeats", type=int, default=5)
    run.add_argument("--out", required=True, help="comparison JSON path")
    run.add_argument("--workdir", default=None,
                     help="where intermediate reports and CSVs go (default: temp)")
    run.add_argument("--rtol", type=float, default=1e-6)
    run.add_argument("--atol", type=float, default=1e-9)
    return parser


def _write(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _cmd_run(args):
    models = [m for chunk in args.models for m in chunk.split(",") if m]
    workdir = args.workdir or tempfile.mkdtemp(prefix="baseline_compare_")
    try:
        from .baselines import require_baseline
        require_baseline()
    except BaselineUnavailable as exc:
        _write(args.out, {"skipped": str(exc), "spec": args.spec, "models": models})
        print(f"skipped: {exc}")
        return 0

    primary, train_csv, val_csv = run_primary(
        args.spec, models, args.seed, args.repeats, workdir,
        task=args.task, target=args.target)
    baseline = run_baseline_suite(primary, train_csv, val_csv,
                                  args.repeats, target=args.target)
    comparable = [r for r in primary if not r.get("error") and r["model"] != "noop"]
    rows = compare_reports(comparable, baseline, rtol=args.rtol, atol=args.atol)
    summary = summarize(rows)
    _write(args.out, {
        "spec": args.spec,
        "seed": args.seed,
        "repeats": args.repeats,
        "primary": primary,
        "baseline": baseline,
        "rows": [r.to_dict() for r in rows],
        "summary": summary,
    })

    header = (f"{'model':<12} {'primary_ms':>12} {'baseline_ms':>12} "
              f"{'ratio':>8}  gated")
    print(header)
    print("-" * len(header))
    for r in rows:
        ratio = "-" if r.speed_ratio is None else f"{r.speed_ratio:.2f}"
        gate = {True: "pass", False: "FAIL", None: "-"}[r.within_tolerance]
        print(f"{r.model:<12} {r.time_primary_ms:>12.3f} "
              f"{r.time_baseline_ms:>12.3f} {ratio:>8}  {gate}")
    print(f"mean speed ratio {summary['mean_speed_ratio']:.2f} "
          f"over {summary['rows']} rows")
    return 0 if summary["passed"] else 1


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _cmd_run(args)
    except CompareError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
