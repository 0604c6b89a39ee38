"""Evaluation reports and their statistics across runs.
"""

import io
import json
import os
import statistics
import typing
from typing import (
    Any,
    BinaryIO,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Union,
)

from ..budget import BudgetSchedule
from ..lifecycle.ledger import CostLedger
from ..utils.errors import UndefinedReference
from .metrics import TTestResult, relative_drop, ttest_ind

__all__ = [
    "EvalRecord",
    "EvalReport",
    "RunSummary",
    "Significance",
    "summarize_runs",
    "significance",
]

SCHEMA_VERSION = 2
REFERENCE_BUDGET = 1024


class EvalRecord(typing.NamedTuple):
    """The outcome of reading the memory of one instance at one budget.

    Attributes:
        instance_id (str): The identifier of the instance.
        dataset (str): The dataset the instance belongs to.
        budget (int): The budget the memory was read at.
        predicted (str or None): The raw answer of the reader, or `None`
            if the instance failed.
        matched (bool): Whether the answer matches a gold answer.
        tokens_used (int): The number of tokens the memory occupied in the
            context of the reader, visual or textual.
        error (str or None): The error that made the instance fail.

    """

    instance_id: str
    dataset: str
    budget: int
    predicted: Optional[str]
    matched: bool
    tokens_used: int
    error: Optional[str] = None


class EvalReport(object):
    """The records of a budget sweep, with their accuracy per budget.

    Attributes:
        records (list of EvalRecord): One record per instance and budget.
        budgets (tuple of int): The budgets of the sweep, in increasing
            order.
        seed (int): The seed of the run.
        modality (str): ``visual`` when memories were read as images,
            ``text`` when they were read as truncated text.
        ledgers (dict): The cost ledger of every instance, by identifier.
        skipped (int): The number of malformed instance records skipped
            when loading the suite.
        schedule (BudgetSchedule or None): The schedule visual memories
            were fitted with, or `None` for text reports.

    """

    __slots__ = ("records", "budgets", "seed", "modality", "ledgers", "skipped", "schedule")

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "EvalReport":
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema version: {version!r}")
        schedule = data.get("schedule")
        return cls(
            (EvalRecord(**record) for record in data["records"]),
            data["budgets"],
            seed=data.get("seed", 0),
            modality=data.get("modality", "visual"),
            ledgers={k: CostLedger.from_dict(v) for k, v in data.get("ledgers", {}).items()},
            skipped=data.get("skipped", 0),
            schedule=BudgetSchedule.from_dict(schedule) if schedule is not None else None,
        )

    @classmethod
    def loads(cls, text: str) -> "EvalReport":
        """Load a report from the text of a JSON report."""
        return cls.from_dict(json.loads(text))

    @classmethod
    def load(cls, file: Union[str, os.PathLike, BinaryIO]) -> "EvalReport":
        """Load a report from a path or a binary handle to a JSON report."""
        if isinstance(file, (str, os.PathLike)):
            with open(file, "rb") as handle:
                return cls.from_dict(json.load(handle))
        return cls.from_dict(json.load(file))

    def __init__(
        self,
        records: Iterable[EvalRecord] = (),
        budgets: Iterable[int] = (),
        seed: int = 0,
        modality: str = "visual",
        ledgers: Optional[Mapping[str, CostLedger]] = None,
        skipped: int = 0,
        schedule: Optional[BudgetSchedule] = None,
    ):
        if modality not in ("visual", "text"):
            raise ValueError(f"invalid modality: {modality!r}")
        self.records: List[EvalRecord] = list(records)
        self.budgets = tuple(sorted(set(budgets).union(r.budget for r in self.records)))
        self.seed = seed
        self.modality = modality
        self.ledgers: Dict[str, CostLedger] = dict(ledgers or {})
        self.skipped = skipped
        self.schedule = schedule

    def __repr__(self) -> str:
        return f"<EvalReport of {len(self.records)} records at budgets {list(self.budgets)}>"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EvalReport):
            return self.to_dict() == other.to_dict()
        return False

    # --- Statistics ---------------------------------------------------------

    def datasets(self) -> List[str]:
        return sorted({record.dataset for record in self.records})

    def failures(self) -> List[str]:
        """Get the identifiers of the instances that failed, in order."""
        failed = (r.instance_id for r in self.records if r.error is not None)
        return list(dict.fromkeys(failed))

    def instance_count(self) -> int:
        return len({(r.dataset, r.instance_id) for r in self.records})

    def accuracy(self, budget: int, dataset: Optional[str] = None) -> float:
        """Get the fraction of matched answers at a budget.

        Failed instances count as unmatched.

        Raises:
            KeyError: When no record was made at that budget.

        """
        selected = [
            r.matched
            for r in self.records
            if r.budget == budget and dataset in (None, r.dataset)
        ]
        if not selected:
            raise KeyError(budget)
        return sum(selected) / len(selected)

    def accuracies(self) -> Dict[str, Dict[int, float]]:
        """Get the accuracy of every dataset at every budget."""
        table: Dict[str, Dict[int, float]] = {}
        for dataset in self.datasets():
            row = table[dataset] = {}
            for budget in self.budgets:
                try:
                    row[budget] = self.accuracy(budget, dataset)
                except KeyError:
                    pass
        return table

    def relative_drops(
        self, reference: int = REFERENCE_BUDGET
    ) -> Dict[str, Dict[int, Optional[float]]]:
        """Get the accuracy change of every budget relative to a reference.

        Drops are `None` when the reference budget was not evaluated or
        when the reference accuracy is zero.
        """
        table: Dict[str, Dict[int, Optional[float]]] = {}
        for dataset, row in self.accuracies().items():
            ref = row.get(reference)
            drops = table[dataset] = {}
            for budget, acc in row.items():
                try:
                    drops[budget] = None if ref is None else relative_drop(acc, ref)
                except UndefinedReference:
                    drops[budget] = None
        return table

    # --- Serialization ------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "seed": self.seed,
            "modality": self.modality,
            "budgets": list(self.budgets),
            "skipped": self.skipped,
            "schedule": self.schedule.to_dict() if self.schedule is not None else None,
            "failures": self.failures(),
            "accuracy": {
                dataset: {str(b): acc for b, acc in row.items()}
                for dataset, row in self.accuracies().items()
            },
            "relative_drop": {
                dataset: {str(b): drop for b, drop in row.items()}
                for dataset, row in self.relative_drops().items()
            },
            "records": [record._asdict() for record in self.records],
            "ledgers": {k: ledger.to_dict() for k, ledger in sorted(self.ledgers.items())},
        }

    def dump(self, file: BinaryIO, format: str = "json") -> None:
        """Serialize the report to a binary file handle.

        Arguments:
            file (~typing.BinaryIO): A binary file handle open in writing
                mode.
            format (str): The serialization format to use, either **json**
                for the complete report or **csv** for the accuracy table.

        """
        from ..serializers import BaseSerializer

        for cls in BaseSerializer.__subclasses__():
            if cls.format == format:
                cls(self).dump(file)  # type: ignore
                break
        else:
            raise ValueError(f"could not find a serializer to handle {format!r}")

    def dumps(self, format: str = "json") -> str:
        s = io.BytesIO()
        self.dump(s, format=format)
        return s.getvalue().decode("utf-8")


class RunSummary(typing.NamedTuple):
    """The accuracy of independent runs at one budget, in percent."""

    mean: float
    std: float
    runs: int


def _run_accuracies(
    reports: Sequence[EvalReport], budget: int, dataset: Optional[str]
) -> List[float]:
    return [report.accuracy(budget, dataset) * 100.0 for report in reports]


def summarize_runs(reports: Sequence[EvalReport]) -> Dict[str, Dict[int, RunSummary]]:
    """Get the mean and standard deviation of accuracies across runs.

    Standard deviations are sample standard deviations, and are zero for
    a single run.

    Raises:
        ValueError: When no report is given.

    """
    if not reports:
        raise ValueError("cannot summarize zero runs")
    summary: Dict[str, Dict[int, RunSummary]] = {}
    datasets = sorted({d for report in reports for d in report.datasets()})
    budgets = sorted({b for report in reports for b in report.budgets})
    for dataset in datasets:
        row = summary[dataset] = {}
        for budget in budgets:
            try:
                values = _run_accuracies(reports, budget, dataset)
            except KeyError:
                continue
            std = statistics.stdev(values) if len(values) > 1 else 0.0
            row[budget] = RunSummary(statistics.mean(values), std, len(values))
    return summary


class Significance(typing.NamedTuple):
    """The accuracy gain of a method over another, with its t-test."""

    gain: float
    test: TTestResult

    def is_significant(self, alpha: float = 0.05) -> bool:
        return self.test.pvalue < alpha


def significance(
    reports_a: Sequence[EvalReport],
    reports_b: Sequence[EvalReport],
    budget: int,
    dataset: Optional[str] = None,
) -> Significance:
    """Test whether the runs of ``reports_a`` beat those of ``reports_b``.

    Raises:
        DegenerateSamples: When a method has fewer than two runs, or when
            the accuracies of both methods do not vary across runs.

    """
    a = _run_accuracies(reports_a, budget, dataset)
    b = _run_accuracies(reports_b, budget, dataset)
    gain = statistics.mean(a) - statistics.mean(b)
    return Significance(gain, ttest_ind(a, b))
