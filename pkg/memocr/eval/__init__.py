"""Measurement of memory agents under visual-token budgets.
"""

from .instance import EvalInstance
from .metrics import (
    TTestResult,
    extract_boxed,
    normalize_answer,
    relative_drop,
    sem_match,
    ttest_ind,
)
from .precision import RegionPrecisionStats, RegionStats, inject_evidence, region_precision
from .report import (
    EvalRecord,
    EvalReport,
    RunSummary,
    Significance,
    significance,
    summarize_runs,
)
from .suite import EvalSuite
from .sweep import PipelineConfig, budget_sweep
from .synthetic import make_suite

__all__ = [
    "EvalInstance",
    "EvalSuite",
    "TTestResult",
    "extract_boxed",
    "normalize_answer",
    "relative_drop",
    "sem_match",
    "ttest_ind",
    "RegionStats",
    "RegionPrecisionStats",
    "inject_evidence",
    "region_precision",
    "EvalRecord",
    "EvalReport",
    "RunSummary",
    "Significance",
    "significance",
    "summarize_runs",
    "PipelineConfig",
    "budget_sweep",
    "make_suite",
]
