"""Deterministic clients standing in for a vision-language model.

The mock drafter is extractive: it keeps the sentences of a chunk that
share enough keywords with the question, and promotes to a level-1 heading
every sentence containing a known evidence string. The mock reader only
sees the text boxes that are still legible at the scale the memory image
was fitted to, which makes its accuracy follow the layout of the memory.
"""

import re
import typing
from typing import FrozenSet, Iterable, List, Optional, Sequence

from ...render.page import join_boxes
from ...salience import normalize_source, parse
from ..stream import Tokenizer, default_tokenizer, truncate_text_memory
from .base import DrafterClient, ReaderClient

if typing.TYPE_CHECKING:
    from ...budget import LegibilityModel
    from ...render.pipeline import RenderedMemory

__all__ = ["MockDrafter", "MockReader", "keywords", "split_sentences"]

SENTINEL = "UNKNOWN"

STOPWORDS: FrozenSet[str] = frozenset(
    """
    a about after all also an and any are as at be been before but by can
    could did do does for from had has have he her his how i if in into is
    it its me my no not of on or our she so than that the their them then
    there these they this to was we were what when where which while who
    whom whose why will with would you your
    """.split()
)

_SENTENCES = re.compile(r"(?<=[.!?])\s+")
_WORDS = re.compile(r"\w+")
_SPACES = re.compile(r"\s+")


def split_sentences(text: str) -> List[str]:
    """Split a text into sentences on terminal punctuation."""
    sentences = (_SPACES.sub(" ", s).strip() for s in _SENTENCES.split(text))
    return [sentence for sentence in sentences if sentence]


def keywords(text: str) -> FrozenSet[str]:
    """Get the lowercase non-stopword words of a text."""
    return frozenset(w for w in _WORDS.findall(text.lower()) if w not in STOPWORDS)


class MockDrafter(DrafterClient):
    """An extractive drafter promoting evidence sentences to headings.

    Arguments:
        evidence (iterable of str): Strings whose containing sentences are
            promoted to level-1 headings, compared case-insensitively.
        threshold (int): The number of distinct keywords a sentence must
            share with the question to be kept as body text.
        max_tokens (int): The maximum number of tokens of the memory.
        tokenizer (Tokenizer, optional): The tokenizer counting memory
            tokens. Defaults to whitespace tokens.

    """

    def __init__(
        self,
        evidence: Iterable[str] = (),
        threshold: int = 2,
        max_tokens: int = 2048,
        tokenizer: Optional[Tokenizer] = None,
    ):
        self.evidence = tuple(e.lower() for e in evidence if e.strip())
        self.threshold = threshold
        self.max_tokens = max_tokens
        self.tokenizer = tokenizer if tokenizer is not None else default_tokenizer()

    def __repr__(self) -> str:
        return f"{type(self).__name__}(evidence={list(self.evidence)!r}, threshold={self.threshold})"

    def _is_evidence(self, sentence: str) -> bool:
        lowered = sentence.lower()
        return any(evidence in lowered for evidence in self.evidence)

    def draft(self, previous: str, chunk: str, question: str, prompt: str = "") -> str:
        terms = keywords(question)
        promoted: List[str] = []
        kept: List[str] = []
        for sentence in split_sentences(chunk):
            if self._is_evidence(sentence):
                promoted.append(sentence)
            elif len(terms & keywords(sentence)) >= self.threshold:
                kept.append(sentence)
        if not promoted and not kept:
            return previous

        tree = parse(normalize_source(previous))
        seen = {block.text for block in tree}
        old_headings = [b.to_markdown() for b in tree if b.kind == "heading" and b.level == 1]
        old_others = [b.to_markdown() for b in tree if not (b.kind == "heading" and b.level == 1)]

        new_headings: List[str] = []
        new_paragraphs: List[str] = []
        for sentence in promoted:
            if sentence not in seen:
                seen.add(sentence)
                new_headings.append(f"# {sentence}")
        for sentence in kept:
            if sentence not in seen:
                seen.add(sentence)
                new_paragraphs.append(sentence)

        memory = "\n\n".join(old_headings + new_headings + old_others + new_paragraphs)
        return truncate_text_memory(memory, self.max_tokens, self.tokenizer)


class MockReader(ReaderClient):
    """A reader answering only from the legible part of a memory.

    Arguments:
        golds (iterable of str): The candidate answers the reader knows
            about, returned when found in the legible text.
        legibility (LegibilityModel, optional): The model deciding which
            boxes of a memory image can be read.
        sentinel (str): The answer given when nothing relevant is legible.

    """

    def __init__(
        self,
        golds: Iterable[str] = (),
        legibility: Optional["LegibilityModel"] = None,
        sentinel: str = SENTINEL,
    ):
        self.golds = tuple(golds)
        self.legibility = legibility
        self.sentinel = sentinel

    def __repr__(self) -> str:
        return f"{type(self).__name__}(golds={list(self.golds)!r})"

    def _answer(self, text: str, candidates: Sequence[str], question: str) -> str:
        from ...eval.metrics import normalize_answer

        normalized = normalize_answer(text)
        for gold in self.golds:
            if normalize_answer(gold) and normalize_answer(gold) in normalized:
                return f"\\boxed{{{gold}}}"

        terms = keywords(question)
        best: Optional[str] = None
        for candidate in candidates:
            if terms & keywords(candidate) and (best is None or len(candidate) > len(best)):
                best = candidate
        return f"\\boxed{{{best if best is not None else self.sentinel}}}"

    def read(self, memory: "RenderedMemory", question: str, prompt: str = "") -> str:
        boxes = memory.legible_boxes(self.legibility)
        return self._answer(join_boxes(boxes), [box.text for box in boxes], question)

    def read_text(self, memory: str, question: str, prompt: str = "") -> str:
        texts = [block.text for block in parse(normalize_source(memory))]
        return self._answer(" ".join(texts), texts, question)
