"""Salience-aware parsing of the Markdown memory format.

The rich-text memory drafted by an agent is a small Markdown document whose
structure encodes how important each piece of information is: headings and
bold text are meant to stay readable when the rendered memory is shrunk,
plain body text is not. This module parses the supported subset of Markdown
into a `SalienceTree`, and classifies every span of text into a
`PriorityClass` under a `PriorityConfig`.

Only ATX headings (``#`` to ``######``), ``-`` / ``*`` bullets indented by
two spaces per level, ``**bold**`` inline markers and plain paragraphs are
recognized. Anything else is kept as plain text: the parser never fails.

"""

import enum
import re
import typing
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .utils.meta import roundrepr, typechecked

__all__ = [
    "InlineSpan",
    "Block",
    "SalienceTree",
    "PriorityClass",
    "PriorityConfig",
    "normalize_source",
    "parse",
    "priority_class",
]

_HEADING = re.compile(r"^(#{1,6})\s+(.*)$")
_HEADING_EMPTY = re.compile(r"^#{1,6}$")
_BULLET = re.compile(r"^( *)([-*])\s+(.*)$")
_BOLD = re.compile(r"\*\*(.+?)\*\*")
_FENCED = re.compile(r"```[^\n`]*\n(.*?)\n?```", re.DOTALL)
_FENCE_LINE = re.compile(r"^\s*```", re.MULTILINE)

KINDS = frozenset({"heading", "paragraph", "bullet"})


# --- Data model -------------------------------------------------------------


@roundrepr
class InlineSpan(object):
    """A run of inline text sharing the same emphasis."""

    text: str
    bold: bool

    __slots__ = ("text", "bold")

    def __init__(self, text: str, bold: bool = False):
        if "\n" in text:
            raise ValueError("inline spans cannot contain a newline")
        self.text = text
        self.bold = bold

    def __eq__(self, other: object) -> bool:
        if isinstance(other, InlineSpan):
            return self.text == other.text and self.bold == other.bold
        return False

    def __hash__(self) -> int:
        return hash((InlineSpan, self.text, self.bold))

    def to_markdown(self) -> str:
        return f"**{self.text}**" if self.bold else self.text


@roundrepr
class Block(object):
    """A block of the memory document: a heading, a paragraph or a bullet.

    Attributes:
        id (int): The ordinal of the block in its tree, starting at zero.
        kind (str): One of ``heading``, ``paragraph`` or ``bullet``.
        spans (tuple of InlineSpan): The inline content of the block.
        level (int or None): The heading level, between 1 and 6, for
            ``heading`` blocks only.
        depth (int or None): The nesting depth, starting at zero, for
            ``bullet`` blocks only.

    """

    id: int
    kind: str
    spans: Tuple[InlineSpan, ...]
    level: Optional[int]
    depth: Optional[int]

    __slots__ = ("id", "kind", "spans", "level", "depth")

    def __init__(
        self,
        id: int,
        kind: str,
        spans: Sequence[InlineSpan],
        level: Optional[int] = None,
        depth: Optional[int] = None,
    ):
        if kind not in KINDS:
            raise ValueError(f"invalid block kind: {kind!r}")
        if kind == "heading" and (level is None or not 1 <= level <= 6):
            raise ValueError(f"invalid heading level: {level!r}")
        if kind == "bullet" and (depth is None or depth < 0):
            raise ValueError(f"invalid bullet depth: {depth!r}")
        self.id = id
        self.kind = kind
        self.spans = tuple(spans)
        self.level = level if kind == "heading" else None
        self.depth = depth if kind == "bullet" else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Block):
            return (
                self.id == other.id
                and self.kind == other.kind
                and self.spans == other.spans
                and self.level == other.level
                and self.depth == other.depth
            )
        return False

    def __hash__(self) -> int:
        return hash((Block, self.id, self.kind, self.spans, self.level, self.depth))

    @property
    def text(self) -> str:
        """`str`: The text of the block, with the markup stripped."""
        return "".join(span.text for span in self.spans)

    @property
    def style_key(self) -> str:
        """`str`: The key of the block in a style table (``h1``, ``bullet``...)."""
        if self.kind == "heading":
            return f"h{self.level}"
        return self.kind

    def to_markdown(self) -> str:
        inline = "".join(span.to_markdown() for span in self.spans)
        if self.kind == "heading":
            return f"{'#' * typing.cast(int, self.level)} {inline}"
        if self.kind == "bullet":
            return f"{'  ' * typing.cast(int, self.depth)}- {inline}"
        return inline


class SalienceTree(Sequence[Block]):
    """A parsed memory document, as an ordered sequence of blocks.

    Example:
        >>> tree = memocr.parse("# Gene MacLellan\\n\\nwrote *Snowbird*")
        >>> [block.style_key for block in tree]
        ['h1', 'paragraph']
        >>> tree[0].text
        'Gene MacLellan'

    """

    blocks: Tuple[Block, ...]
    source: str

    __slots__ = ("blocks", "source")

    def __init__(self, blocks: Iterable[Block] = (), source: str = ""):
        self.blocks = tuple(blocks)
        self.source = source

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.blocks)!r}, source={self.source!r})"

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __getitem__(self, index):  # type: ignore
        return self.blocks[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SalienceTree):
            return self.blocks == other.blocks
        return False

    def __hash__(self) -> int:
        return hash((SalienceTree, self.blocks))

    def to_markdown(self) -> str:
        """Serialize the blocks back to Markdown.

        The output is not byte-identical to the original source, but it
        parses back to the same blocks.
        """
        return "\n\n".join(block.to_markdown() for block in self.blocks)


class PriorityClass(enum.Enum):
    """The visual priority of a piece of memory text."""

    CRUCIAL = "crucial"
    DETAILED = "detailed"

    def __str__(self) -> str:
        return self.value


@roundrepr
class PriorityConfig(object):
    """The rule deciding which spans of a memory are crucial.

    A span is crucial when its block is a heading of level at most
    ``max_heading_level``, or when ``bold`` is set and the span is bold.

    """

    max_heading_level: int
    bold: bool

    __slots__ = ("max_heading_level", "bold")

    @classmethod
    def default(cls) -> "PriorityConfig":
        """Get the default configuration: H1, H2 and bold text are crucial."""
        return cls(2, bold=True)

    @classmethod
    def strict(cls) -> "PriorityConfig":
        """Get the strict configuration: only H1 headings are crucial."""
        return cls(1, bold=False)

    @typechecked()
    def __init__(self, max_heading_level: int = 2, bold: bool = True):
        if not 0 <= max_heading_level <= 6:
            raise ValueError("`max_heading_level` must be between 0 and 6")
        self.max_heading_level = max_heading_level
        self.bold = bold

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PriorityConfig):
            return (self.max_heading_level, self.bold) == (
                other.max_heading_level,
                other.bold,
            )
        return False

    def __hash__(self) -> int:
        return hash((PriorityConfig, self.max_heading_level, self.bold))


# --- Operations -------------------------------------------------------------


def normalize_source(raw: str) -> str:
    """Normalize the raw text produced by a drafter.

    Leading and trailing whitespace is stripped, and a single code fence
    wrapping the whole document is removed, unless the fenced content
    itself contains another fence line.

    Example:
        >>> memocr.normalize_source("```markdown\\n# A\\n```")
        '# A'
        >>> memocr.normalize_source("  hello  ")
        'hello'

    """
    text = raw.strip()
    match = _FENCED.fullmatch(text)
    if match is not None and _FENCE_LINE.search(match.group(1)) is None:
        text = match.group(1).strip()
    return text


def _parse_inline(text: str) -> List[InlineSpan]:
    spans: List[InlineSpan] = []

    def push(chunk: str, bold: bool) -> None:
        if not chunk:
            return
        if spans and spans[-1].bold == bold:
            spans[-1] = InlineSpan(spans[-1].text + chunk, bold)
        else:
            spans.append(InlineSpan(chunk, bold))

    position = 0
    for match in _BOLD.finditer(text):
        push(text[position : match.start()], False)
        push(match.group(1), True)
        position = match.end()
    push(text[position:], False)
    return spans


def parse(markdown: str) -> SalienceTree:
    """Parse a normalized Markdown memory into a `SalienceTree`.

    Consecutive non-blank lines that are neither headings nor bullets are
    joined with a single space into one paragraph. Blank lines only
    delimit paragraphs. Unmatched ``**`` markers are kept as literal text.

    """
    blocks: List[Block] = []
    paragraph: List[str] = []

    def add(kind: str, text: str, **kwargs: int) -> None:
        spans = _parse_inline(text)
        if spans:
            blocks.append(Block(len(blocks), kind, spans, **kwargs))

    def flush() -> None:
        if paragraph:
            add("paragraph", " ".join(paragraph))
            paragraph.clear()

    for line in markdown.splitlines():
        stripped = line.strip()
        if not stripped:
            flush()
        elif _HEADING_EMPTY.match(stripped):
            flush()
        elif _HEADING.match(stripped):
            flush()
            match = typing.cast(typing.Match[str], _HEADING.match(stripped))
            add("heading", match.group(2).strip(), level=len(match.group(1)))
        elif _BULLET.match(line.rstrip()):
            flush()
            match = typing.cast(typing.Match[str], _BULLET.match(line.rstrip()))
            add("bullet", match.group(3).strip(), depth=len(match.group(1)) // 2)
        else:
            paragraph.append(stripped)

    flush()
    return SalienceTree(blocks, markdown)


def priority_class(
    block: Block, span: InlineSpan, cfg: Optional[PriorityConfig] = None
) -> PriorityClass:
    """Get the priority class of a span inside its block.

    Example:
        >>> tree = memocr.parse("## Snowbird")
        >>> block = tree[0]
        >>> memocr.priority_class(block, block.spans[0])
        <PriorityClass.CRUCIAL: 'crucial'>
        >>> cfg = memocr.PriorityConfig.strict()
        >>> memocr.priority_class(block, block.spans[0], cfg)
        <PriorityClass.DETAILED: 'detailed'>

    """
    cfg = cfg if cfg is not None else PriorityConfig.default()
    if block.kind == "heading" and typing.cast(int, block.level) <= cfg.max_heading_level:
        return PriorityClass.CRUCIAL
    if cfg.bold and span.bold:
        return PriorityClass.CRUCIAL
    return PriorityClass.DETAILED
