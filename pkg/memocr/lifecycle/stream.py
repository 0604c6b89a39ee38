"""Tokenization and chunking of long contexts.
"""

import abc
import re
import typing
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..utils.errors import EmptyContext
from ..utils.meta import roundrepr

__all__ = [
    "Tokenizer",
    "WhitespaceTokenizer",
    "Chunk",
    "ContextStream",
    "chunk_stream",
    "truncate_text_memory",
]


class Tokenizer(abc.ABC):
    """An abstract tokenizer, locating tokens as character offsets."""

    @abc.abstractmethod
    def spans(self, text: str) -> List[Tuple[int, int]]:
        """Get the ``(start, end)`` offsets of every token of ``text``."""
        return NotImplemented  # type: ignore

    def count(self, text: str) -> int:
        return len(self.spans(text))


class WhitespaceTokenizer(Tokenizer):
    """A tokenizer treating every run of non-whitespace as one token.

    Example:
        >>> tokenizer = memocr.WhitespaceTokenizer()
        >>> tokenizer.count("Gene MacLellan wrote  Snowbird.")
        4

    """

    _pattern = re.compile(r"\S+")

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WhitespaceTokenizer)

    def __hash__(self) -> int:
        return hash(WhitespaceTokenizer)

    def spans(self, text: str) -> List[Tuple[int, int]]:
        return [match.span() for match in self._pattern.finditer(text)]


_DEFAULT_TOKENIZER = WhitespaceTokenizer()


def default_tokenizer() -> Tokenizer:
    return _DEFAULT_TOKENIZER


@roundrepr
class Chunk(object):
    """A chunk of a long context, numbered from 1."""

    index: int
    text: str
    token_count: int

    __slots__ = ("index", "text", "token_count")

    def __init__(self, index: int, text: str, token_count: int):
        if token_count < 1:
            raise ValueError("a chunk must contain at least one token")
        self.index = index
        self.text = text
        self.token_count = token_count

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Chunk):
            return (self.index, self.text, self.token_count) == (
                other.index,
                other.text,
                other.token_count,
            )
        return False

    def __hash__(self) -> int:
        return hash((Chunk, self.index, self.text))


class ContextStream(Sequence[Chunk]):
    """An ordered stream of chunks to be ingested by a memory agent."""

    chunks: Tuple[Chunk, ...]

    __slots__ = ("chunks",)

    @classmethod
    def from_chunks(
        cls, texts: Iterable[str], tokenizer: Optional[Tokenizer] = None
    ) -> "ContextStream":
        """Create a stream from pre-split chunks, kept as they are.

        Chunks without any token are dropped, and the others are numbered
        in order from 1.

        Raises:
            EmptyContext: When none of the chunks contains a token.

        """
        tokenizer = tokenizer if tokenizer is not None else _DEFAULT_TOKENIZER
        chunks: List[Chunk] = []
        for text in texts:
            count = tokenizer.count(text)
            if count > 0:
                chunks.append(Chunk(len(chunks) + 1, text, count))
        return cls(chunks)

    def __init__(self, chunks: Iterable[Chunk]):
        self.chunks = tuple(chunks)
        if not self.chunks:
            raise EmptyContext("cannot create a stream without any token")

    def __repr__(self) -> str:
        return f"<ContextStream of {len(self.chunks)} chunks, {self.total_tokens} tokens>"

    def __len__(self) -> int:
        return len(self.chunks)

    def __iter__(self) -> Iterator[Chunk]:
        return iter(self.chunks)

    def __getitem__(self, index):  # type: ignore
        return self.chunks[index]

    @property
    def total_tokens(self) -> int:
        return sum(chunk.token_count for chunk in self.chunks)

    @property
    def text(self) -> str:
        return "".join(chunk.text for chunk in self.chunks)


def chunk_stream(
    text: str, chunk_size: int = 5000, tokenizer: Optional[Tokenizer] = None
) -> ContextStream:
    """Split a long context into chunks of at most ``chunk_size`` tokens.

    Chunks are cut right before the first token of the next chunk, so that
    no token is split and the concatenation of all chunks is exactly the
    input text.

    Raises:
        EmptyContext: When ``text`` does not contain any token.

    Example:
        >>> stream = memocr.chunk_stream("a b c d e", chunk_size=2)
        >>> [chunk.text for chunk in stream]
        ['a b ', 'c d ', 'e']

    """
    if chunk_size < 1:
        raise ValueError("`chunk_size` must be strictly positive")
    tokenizer = tokenizer if tokenizer is not None else _DEFAULT_TOKENIZER
    spans = tokenizer.spans(text)
    if not spans:
        raise EmptyContext("cannot chunk a context without any token")

    starts = [0] + [spans[i][0] for i in range(chunk_size, len(spans), chunk_size)]
    ends = starts[1:] + [len(text)]
    counts = [min(chunk_size, len(spans) - i) for i in range(0, len(spans), chunk_size)]
    return ContextStream(
        Chunk(index, text[start:end], count)
        for index, (start, end, count) in enumerate(zip(starts, ends, counts), 1)
    )


def truncate_text_memory(
    text: str, budget: int, tokenizer: Optional[Tokenizer] = None
) -> str:
    """Keep only the first ``budget`` tokens of a textual memory.

    Example:
        >>> memocr.truncate_text_memory("a b c d", 2)
        'a b'
        >>> memocr.truncate_text_memory("a b c d", 0)
        ''

    """
    if budget < 0:
        raise ValueError("`budget` cannot be negative")
    tokenizer = tokenizer if tokenizer is not None else _DEFAULT_TOKENIZER
    spans = tokenizer.spans(text)
    if budget >= len(spans):
        return text
    if budget == 0:
        return ""
    return text[: spans[budget - 1][1]]
