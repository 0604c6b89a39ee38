"""Oracle evidence injection and region-wise evidence statistics.
"""

import re
import typing
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

from ..lifecycle.memory import MemoryState
from ..lifecycle.stream import Tokenizer, default_tokenizer
from ..render.page import PageLayout, layout
from ..render.style import StyleSheet
from ..salience import PriorityClass, PriorityConfig, normalize_source, parse

__all__ = ["RegionStats", "RegionPrecisionStats", "inject_evidence", "region_precision"]

_SPACES = re.compile(r"\s+")
_BLOCK_MARKER = re.compile(r"^(?:#+|[-*])(?:\s+|$)")
_INLINE_MARKUP = re.compile(r"\*\*|`{3,}")


def _plain(evidence: str) -> str:
    text = _SPACES.sub(" ", evidence).strip()
    while True:
        stripped = _INLINE_MARKUP.sub("", text)
        stripped = _BLOCK_MARKER.sub("", _SPACES.sub(" ", stripped).strip())
        if stripped == text:
            return text
        text = stripped


def inject_evidence(
    memory: MemoryState,
    region: Union[PriorityClass, str],
    evidence: str,
    tokenizer: Optional[Tokenizer] = None,
) -> MemoryState:
    """Insert an evidence sentence into a region of a memory.

    Evidence injected in the crucial region becomes a new level-1 heading
    before the rest of the memory, while evidence injected in the detailed
    region becomes a new paragraph after it. The rest of the memory is kept
    as it is. Block markers and inline markup are stripped from the evidence,
    so it always lands in the requested region.

    Raises:
        ValueError: When ``evidence`` is empty once stripped of markup.

    Example:
        >>> memory = memocr.MemoryState(1, "Some notes.", 2)
        >>> print(memocr.inject_evidence(memory, "crucial", "Gene wrote it").rich_text)
        # Gene wrote it
        <BLANKLINE>
        Some notes.

    """
    region = PriorityClass(region)
    text = _plain(evidence)
    if not text:
        raise ValueError("cannot inject an empty evidence")
    tokenizer = tokenizer if tokenizer is not None else default_tokenizer()

    previous = normalize_source(memory.rich_text)
    if region is PriorityClass.CRUCIAL:
        parts = [f"# {text}", previous]
    else:
        parts = [previous, text]
    rich_text = "\n\n".join(part for part in parts if part)
    return MemoryState(memory.step, rich_text, tokenizer.count(rich_text))


class RegionStats(typing.NamedTuple):
    """The evidence statistics of a single region of a memory."""

    token_count: int
    evidence_token_count: int

    @property
    def precision(self) -> float:
        """`float`: The fraction of the tokens of the region that are evidence."""
        if self.token_count == 0:
            return 0.0
        return self.evidence_token_count / self.token_count

    def to_dict(self) -> Dict[str, float]:
        return {
            "token_count": self.token_count,
            "evidence_token_count": self.evidence_token_count,
            "precision": self.precision,
        }


class RegionPrecisionStats(typing.NamedTuple):
    """The evidence statistics of the crucial and detailed regions."""

    crucial: RegionStats
    detailed: RegionStats

    @property
    def total_tokens(self) -> int:
        return self.crucial.token_count + self.detailed.token_count

    def to_dict(self) -> Dict[str, Dict[str, float]]:
        return {"crucial": self.crucial.to_dict(), "detailed": self.detailed.to_dict()}


def _evidence_tokens(evidence: Iterable[str]) -> FrozenSet[str]:
    return frozenset(token for text in evidence for token in text.casefold().split())


def _region_stats(text: str, vocabulary: FrozenSet[str]) -> RegionStats:
    tokens = text.casefold().split()
    return RegionStats(len(tokens), sum(token in vocabulary for token in tokens))


def _region_texts(page: PageLayout) -> Tuple[str, str]:
    # a glued box only continues the word of the box just before it on the
    # page, and only when both boxes are in the same region
    parts: Dict[PriorityClass, List[str]] = {
        PriorityClass.CRUCIAL: [],
        PriorityClass.DETAILED: [],
    }
    previous: Optional[PriorityClass] = None
    for box in page.boxes:
        buffer = parts[box.priority]
        if buffer and not (box.joined and previous is box.priority):
            buffer.append(" ")
        buffer.append(box.text)
        previous = box.priority
    return "".join(parts[PriorityClass.CRUCIAL]), "".join(parts[PriorityClass.DETAILED])


def region_precision(
    memory: Union[MemoryState, str],
    evidence: Iterable[str],
    style: Optional[StyleSheet] = None,
    cfg: Optional[PriorityConfig] = None,
) -> RegionPrecisionStats:
    """Measure how concentrated the evidence is in each region of a memory.

    The memory is laid out, and the text of its boxes is split between the
    crucial and the detailed regions. A whitespace token of a region is
    counted as evidence when it is also a token of one of the evidence
    strings, compared case-insensitively.

    Example:
        >>> memory = "# Gene MacLellan wrote Snowbird\\n\\nIt was a hit."
        >>> stats = memocr.region_precision(memory, ["Gene MacLellan wrote Snowbird"])
        >>> stats.crucial.precision, stats.detailed.precision
        (1.0, 0.0)

    """
    text = memory.rich_text if isinstance(memory, MemoryState) else memory
    page = layout(parse(normalize_source(text)), style, cfg, hard_break=True)
    crucial, detailed = _region_texts(page)
    vocabulary = _evidence_tokens(evidence)
    return RegionPrecisionStats(
        _region_stats(crucial, vocabulary),
        _region_stats(detailed, vocabulary),
    )
