"""Command line front end for the benchmark harness.

Subcommands:
  bench run       time one or more models on a dataset, emit a report
  bench compare   diff two report files field by field
  bench backends  show which kernel build is active
"""

import argparse
import os
import sys

from . import backend
from .bench import (
    compare_reports,
    emit_report,
    load_report,
    models_for_task,
    run_benchmark,
)
from .datasets import (
    TASK_CLASSIFICATION,
    TASK_REGRESSION,
    load_dataset,
    parse_dataset_spec,
    save_csv,
)
from .errors import QuickMLError
from .preprocessing import train_val_split
from .rng import Rng

REPEATS_ENV_VAR = "BENCH_REPEATS"


def _build_parser():
    parser = argparse.ArgumentParser(prog="bench")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run timed fits and emit a report")
    run.add_argument("--dataset", required=True,
                     help="CSV path or synthetic:ROWSxCOLS:task recipe")
    run.add_argument("--model", action="append", default=None,
                     help="model name, repeatable; 'all' sweeps the task's models")
    run.add_argument("--task", default=TASK_REGRESSION,
                     choices=[TASK_REGRESSION, TASK_CLASSIFICATION, "classification"],
                     help="task for CSV datasets (recipes carry their own)")
    run.add_argument("--target", default="target",
                     help="target column name for CSV datasets")
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--repeats", type=int, default=5,
                     help=f"timed fits per model ({REPEATS_ENV_VAR} overrides)")
    run.add_argument("--out", default=None, help="write the report here")
    run.add_argument("--format", default="json", choices=["json", "csv", "table"])
    run.add_argument("--dump-data", default=None, metavar="FILE",
                     help="also write the full dataset as CSV")
    run.add_argument("--dump-split", default=None, metavar="PREFIX",
                     help="also write PREFIX_train.csv and PREFIX_val.csv")

    cmp_p = sub.add_parser("compare", help="diff two report files")
    cmp_p.add_argument("--a", required=True, help="first report (json or csv)")
    cmp_p.add_argument("--b", required=True, help="second report (json or csv)")
    cmp_p.add_argument("--rtol", type=float, default=1e-6)
    cmp_p.add_argument("--atol", type=float, default=1e-9)

    sub.add_parser("backends", help="show kernel build selection")
    return parser


def _cmd_run(args) -> int:
    task = TASK_CLASSIFICATION if args.task == "classification" else args.task
    spec = parse_dataset_spec(args.dataset, target=args.target,
                              seed=args.seed, task=task)
    repeats = args.repeats
    env_repeats = os.environ.get(REPEATS_ENV_VAR)
    if env_repeats:
        repeats = int(env_repeats)

    models = args.model or ["all"]
    if "all" in models:
        expanded = []
        for m in models:
            expanded.extend(models_for_task(spec.task) if m == "all" else [m])
        models = expanded

    if args.dump_data or args.dump_split:
        _dump(spec, args.dump_data, args.dump_split)

    reports = [run_benchmark(spec, m, repeats=repeats) for m in models]
    text = emit_report(reports, fmt=args.format, path=args.out)
    if args.out is None:
        print(text)
    failed = [r for r in reports if r.error is not None]
    for r in failed:
        print(f"note: {r.model} recorded error: {r.error}", file=sys.stderr)
    return 0


def _dump(spec, data_path, split_prefix):
    # mirrors the benchmark's stream order so dumps match the timed data
    rng = Rng(spec.seed)
    X, y = load_dataset(spec, rng)
    if data_path:
        save_csv(data_path, X, y, target=spec.target)
    if split_prefix:
        split = train_val_split(X, y, 0.2, rng)
        save_csv(f"{split_prefix}_train.csv", split.X_train, split.y_train,
                 target=spec.target)
        save_csv(f"{split_prefix}_val.csv", split.X_val, split.y_val,
                 target=spec.target)


def _cmd_compare(args) -> int:
    rows = compare_reports(load_report(args.a), load_report(args.b),
                           rtol=args.rtol, atol=args.atol)
    header = f"{'dataset':<28} {'model':<10} {'time_a':>10} {'time_b':>10} {'ratio':>8}  ok"
    print(header)
    print("-" * len(header))
    all_ok = True
    for row in rows:
        ta = "-" if row.time_a_ms is None else f"{row.time_a_ms:.3f}"
        tb = "-" if row.time_b_ms is None else f"{row.time_b_ms:.3f}"
        ratio = "-" if row.speed_ratio is None else f"{row.speed_ratio:.2f}"
        mark = "yes" if row.within_tolerance else "NO"
        print(f"{row.dataset:<28} {row.model:<10} {ta:>10} {tb:>10} {ratio:>8}  {mark}")
        if not row.within_tolerance:
            all_ok = False
            for k, d in row.metric_deltas.items():
                print(f"    {k}: delta {d:+.3e}")
    return 0 if all_ok else 1


def _cmd_backends(args) -> int:
    print(f"active:  {backend.active_backend()}")
    print(f"numba:   {'available' if backend.numba_available() else 'unavailable'}")
    print(f"env var: {backend.ENV_VAR} (numba | numpy | auto)")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "compare":
            return _cmd_compare(args)
        return _cmd_backends(args)
    except QuickMLError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
