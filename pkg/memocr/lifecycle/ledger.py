"""Accounting of the context sizes seen by every model call.
"""

import typing
from typing import Any, Dict, Iterable, Iterator, List, Optional

__all__ = ["LedgerRecord", "CostLedger"]

STAGES = frozenset({"draft", "read"})
UNITS = frozenset({"text", "visual"})


class LedgerRecord(typing.NamedTuple):
    """The context size of a single model call.

    Attributes:
        stage (str): Either ``draft`` or ``read``.
        context_size (int): The number of tokens in the context of the call.
        step (int or None): The lifecycle step of the call.
        unit (str): ``text`` for text tokens, ``visual`` for patch tokens.

    """

    stage: str
    context_size: int
    step: Optional[int] = None
    unit: str = "text"


class CostLedger(object):
    """A record of the context size of every call made during a run.

    The cost of a call is modeled as the square of its context size, the
    cost of self-attention over that context. Since a memory agent keeps a
    bounded memory, the cost of drafting grows linearly with the number
    of chunks of the context.

    Example:
        >>> ledger = memocr.CostLedger()
        >>> ledger.record_draft(1, 100)
        >>> ledger.record_draft(2, 120)
        >>> ledger.draft_cost()
        24400
        >>> ledger.max_context()
        120

    """

    records: List[LedgerRecord]

    __slots__ = ("records",)

    def __init__(self, records: Iterable[LedgerRecord] = ()):
        self.records = list(records)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.records!r})"

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[LedgerRecord]:
        return iter(self.records)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CostLedger):
            return self.records == other.records
        return False

    def record_draft(self, step: int, context_size: int) -> None:
        self.records.append(LedgerRecord("draft", context_size, step, "text"))

    def record_read(
        self, context_size: int, step: Optional[int] = None, unit: str = "visual"
    ) -> None:
        if unit not in UNITS:
            raise ValueError(f"invalid unit: {unit!r}")
        self.records.append(LedgerRecord("read", context_size, step, unit))

    def drafts(self) -> List[LedgerRecord]:
        return [record for record in self.records if record.stage == "draft"]

    def reads(self) -> List[LedgerRecord]:
        return [record for record in self.records if record.stage == "read"]

    def draft_cost(self) -> int:
        """Get the total attention cost of the drafting calls."""
        return sum(record.context_size ** 2 for record in self.drafts())

    def read_cost(self) -> int:
        """Get the total attention cost of the reading calls."""
        return sum(record.context_size ** 2 for record in self.reads())

    def total_cost(self) -> int:
        return self.draft_cost() + self.read_cost()

    def max_context(self, stage: Optional[str] = None) -> int:
        """Get the largest context size, optionally restricted to a stage."""
        sizes = [r.context_size for r in self.records if stage in (None, r.stage)]
        return max(sizes, default=0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "records": [record._asdict() for record in self.records],
            "draft_calls": len(self.drafts()),
            "read_calls": len(self.reads()),
            "draft_cost": self.draft_cost(),
            "read_cost": self.read_cost(),
            "max_context": self.max_context(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CostLedger":
        return cls(LedgerRecord(**record) for record in data.get("records", ()))
