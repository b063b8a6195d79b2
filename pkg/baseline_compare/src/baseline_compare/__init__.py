from .baselines import run_baseline
from .compare import ComparisonRow, compare_reports, summarize
from .errors import (
    BadReport,
    BaselineUnavailable,
    CompareError,
    KeyMismatch,
    PrimaryCliMissing,
    PrimaryRunFailed,
)
from .harness import run_baseline_suite, run_primary
from .report import REPORT_SCHEMA, load_report, validate_report

__version__ = "0.1.0"
