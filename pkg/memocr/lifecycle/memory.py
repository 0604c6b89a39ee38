"""The drafting and reading stages of the memory lifecycle.

A lifecycle run drafts a rich-text memory chunk after chunk, then renders
the final memory to an image fitted to a visual-token budget and asks a
reader to answer from it. Drafting never sees the budget: the memory is
drafted once and can be read at any budget afterwards.
"""

import logging
import typing
from typing import Optional

from ..render.pipeline import RenderedMemory, Renderer
from ..render.style import StyleSheet
from ..salience import normalize_source
from ..utils.errors import ClientError, StepMismatch
from ..utils.meta import roundrepr
from .clients.base import DrafterClient, ReaderClient
from .ledger import CostLedger
from .prompts import (
    build_draft_prompt,
    build_read_prompt,
    build_text_read_prompt,
    prompt_overhead,
)
from .stream import (
    Chunk,
    ContextStream,
    Tokenizer,
    default_tokenizer,
    truncate_text_memory,
)

__all__ = [
    "MemoryState",
    "LifecycleResult",
    "draft_step",
    "run_lifecycle",
    "answer",
    "answer_text",
    "read_rendered",
]

logger = logging.getLogger(__name__)

MAX_MEMORY_TOKENS = 2048
RETRIES = 3


@roundrepr
class MemoryState(object):
    """The rich-text memory after a given number of drafting steps.

    Attributes:
        step (int): The index of the last chunk drafted, ``0`` before any.
        rich_text (str): The normalized Markdown memory.
        token_count (int): The number of tokens of ``rich_text``.

    """

    step: int
    rich_text: str
    token_count: int

    __slots__ = ("step", "rich_text", "token_count")

    @classmethod
    def initial(cls) -> "MemoryState":
        """Create the empty memory a lifecycle starts from."""
        return cls(0, "", 0)

    def __init__(self, step: int, rich_text: str, token_count: int):
        if step < 0:
            raise ValueError("`step` cannot be negative")
        self.step = step
        self.rich_text = rich_text
        self.token_count = token_count

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MemoryState):
            return (self.step, self.rich_text) == (other.step, other.rich_text)
        return False

    def __hash__(self) -> int:
        return hash((MemoryState, self.step, self.rich_text))


class LifecycleResult(typing.NamedTuple):
    """The final memory of a lifecycle run, with the cost of every call."""

    state: MemoryState
    ledger: CostLedger


def draft_step(
    state: MemoryState,
    chunk: Chunk,
    question: str,
    drafter: DrafterClient,
    ledger: Optional[CostLedger] = None,
    max_memory_tokens: int = MAX_MEMORY_TOKENS,
    tokenizer: Optional[Tokenizer] = None,
    retries: int = RETRIES,
) -> MemoryState:
    """Update a memory with the next chunk of the context.

    The drafter output is normalized and truncated to ``max_memory_tokens``
    before becoming the new state. Failed drafter calls are attempted again
    up to ``retries`` times in total.

    Raises:
        StepMismatch: When ``chunk`` is not the chunk following ``state``.
        ClientError: When every attempt of the drafter failed. The error
            carries the index of the failing step.

    """
    if state.step != chunk.index - 1:
        raise StepMismatch(
            f"cannot draft chunk {chunk.index} from a memory at step {state.step}"
        )
    if retries < 1:
        raise ValueError("`retries` must be strictly positive")
    tokenizer = tokenizer if tokenizer is not None else default_tokenizer()

    prompt = build_draft_prompt(question, chunk.text, state.rich_text)
    context_size = chunk.token_count + state.token_count + prompt_overhead(question, tokenizer)

    last_error: Optional[ClientError] = None
    for attempt in range(1, retries + 1):
        try:
            output = drafter.draft(state.rich_text, chunk.text, question, prompt)
            break
        except ClientError as err:
            logger.warning(
                "drafting step %i failed (attempt %i of %i): %s",
                chunk.index,
                attempt,
                retries,
                err,
            )
            last_error = err
    else:
        raise ClientError(
            f"drafter failed after {retries} attempts: {last_error}", step=chunk.index
        ) from last_error

    text = truncate_text_memory(normalize_source(output), max_memory_tokens, tokenizer)
    if ledger is not None:
        ledger.record_draft(chunk.index, context_size)
    return MemoryState(chunk.index, text, tokenizer.count(text))


def run_lifecycle(
    stream: ContextStream,
    question: str,
    drafter: DrafterClient,
    max_memory_tokens: int = MAX_MEMORY_TOKENS,
    tokenizer: Optional[Tokenizer] = None,
    retries: int = RETRIES,
) -> LifecycleResult:
    """Draft a memory over every chunk of a stream, in order.

    Example:
        >>> stream = memocr.chunk_stream("Snowbird was a hit. It sold well.", 4)
        >>> drafter = memocr.MockDrafter(evidence=["sold well"])
        >>> result = memocr.run_lifecycle(stream, "Did Snowbird sell?", drafter)
        >>> result.state.step, len(result.ledger.drafts())
        (2, 2)
        >>> print(result.state.rich_text)
        # It sold well.

    """
    ledger = CostLedger()
    state = MemoryState.initial()
    for chunk in stream:
        state = draft_step(
            state, chunk, question, drafter, ledger, max_memory_tokens, tokenizer, retries
        )
    logger.debug("drafted %i chunks into %i memory tokens", state.step, state.token_count)
    return LifecycleResult(state, ledger)


def answer(
    memory: MemoryState,
    question: str,
    budget: int,
    reader: ReaderClient,
    style: Optional[StyleSheet] = None,
    renderer: Optional[Renderer] = None,
    ledger: Optional[CostLedger] = None,
) -> str:
    """Answer a question from a memory rendered under a visual-token budget.

    Raises:
        InvalidBudget: When ``budget`` is not strictly positive.
        ClientError: When the reader failed.

    """
    if renderer is None:
        renderer = Renderer(style)
    rendered = renderer.render(memory.rich_text).fit(budget)
    return read_rendered(rendered, question, reader, ledger, memory.step)


def read_rendered(
    rendered: RenderedMemory,
    question: str,
    reader: ReaderClient,
    ledger: Optional[CostLedger] = None,
    step: Optional[int] = None,
) -> str:
    """Ask a reader to answer from an already fitted memory image."""
    if ledger is not None:
        ledger.record_read(rendered.visual_tokens, step, "visual")
    return reader.read(rendered, question, build_read_prompt(question))


def answer_text(
    memory: MemoryState,
    question: str,
    budget: int,
    reader: ReaderClient,
    tokenizer: Optional[Tokenizer] = None,
    ledger: Optional[CostLedger] = None,
) -> str:
    """Answer a question from the first ``budget`` tokens of a memory.

    This is the textual baseline of `answer`: instead of being downsampled,
    the memory is truncated to fit the budget.

    Raises:
        ClientError: When the reader failed.

    """
    tokenizer = tokenizer if tokenizer is not None else default_tokenizer()
    text = truncate_text_memory(memory.rich_text, budget, tokenizer)
    if ledger is not None:
        ledger.record_read(tokenizer.count(text), memory.step, "text")
    return reader.read_text(text, question, build_text_read_prompt(question, text))
