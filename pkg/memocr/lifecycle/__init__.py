"""The memory lifecycle: chunked drafting of a memory, then budgeted reading.
"""

from .clients import (
    DrafterClient,
    HttpClientConfig,
    HttpDrafter,
    HttpReader,
    MockDrafter,
    MockReader,
    ReaderClient,
    SerializedDrafter,
    SerializedReader,
)
from .ledger import CostLedger, LedgerRecord
from .memory import (
    LifecycleResult,
    MemoryState,
    answer,
    answer_text,
    draft_step,
    read_rendered,
    run_lifecycle,
)
from .prompts import build_draft_prompt, build_read_prompt, build_text_read_prompt
from .stream import (
    Chunk,
    ContextStream,
    Tokenizer,
    WhitespaceTokenizer,
    chunk_stream,
    truncate_text_memory,
)

__all__ = [
    "Chunk",
    "ContextStream",
    "Tokenizer",
    "WhitespaceTokenizer",
    "chunk_stream",
    "truncate_text_memory",
    "build_draft_prompt",
    "build_read_prompt",
    "build_text_read_prompt",
    "CostLedger",
    "LedgerRecord",
    "MemoryState",
    "LifecycleResult",
    "draft_step",
    "run_lifecycle",
    "answer",
    "answer_text",
    "read_rendered",
    "DrafterClient",
    "ReaderClient",
    "SerializedDrafter",
    "SerializedReader",
    "MockDrafter",
    "MockReader",
    "HttpClientConfig",
    "HttpDrafter",
    "HttpReader",
]
