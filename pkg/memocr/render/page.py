"""Greedy line-breaking of a salience tree on a fixed-width page.
"""

import re
import typing
import warnings
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..salience import Block, PriorityClass, PriorityConfig, SalienceTree, priority_class
from ..utils.errors import WordTooWide
from ..utils.meta import roundrepr
from ..utils.warnings import LayoutWarning
from .style import StyleSheet

__all__ = [
    "LayoutBox",
    "PageLayout",
    "RegionMap",
    "layout",
    "glyph_run_area",
    "region_map",
    "join_boxes",
]

_TOKENS = re.compile(r"\S+|\s+")

# A word is a list of (span index, text) pieces glued without spaces.
_Word = List[Tuple[int, str]]


@roundrepr
class LayoutBox(object):
    """A run of glyphs from a single span, placed on a single line.

    Attributes:
        block_id (int): The identifier of the block the text comes from.
        span_index (int): The index of the span inside its block.
        text (str): The text of the run, single spaces included.
        bbox (tuple of int): The box position and size, as ``(x, y, w,
            h)`` pixels.
        scale (float): The font scale the run is rendered at.
        priority (PriorityClass): The priority class of the span.
        bold (bool): Whether the run is rendered in bold.
        joined (bool): Whether the run continues the text of the previous
            box without a space, either because a word spans two inline
            spans or because a long word was broken over two lines.

    """

    block_id: int
    span_index: int
    text: str
    bbox: Tuple[int, int, int, int]
    scale: float
    priority: PriorityClass
    bold: bool
    joined: bool

    __slots__ = (
        "block_id",
        "span_index",
        "text",
        "bbox",
        "scale",
        "priority",
        "bold",
        "joined",
    )

    def __init__(
        self,
        block_id: int,
        span_index: int,
        text: str,
        bbox: Tuple[int, int, int, int],
        scale: float,
        priority: PriorityClass,
        bold: bool = False,
        joined: bool = False,
    ):
        self.block_id = block_id
        self.span_index = span_index
        self.text = text
        self.bbox = bbox
        self.scale = scale
        self.priority = priority
        self.bold = bold
        self.joined = joined

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LayoutBox):
            return all(getattr(self, x) == getattr(other, x) for x in self.__slots__)
        return False

    def __hash__(self) -> int:
        return hash((LayoutBox, self.block_id, self.span_index, self.bbox))

    @property
    def x(self) -> int:
        return self.bbox[0]

    @property
    def y(self) -> int:
        return self.bbox[1]

    @property
    def w(self) -> int:
        return self.bbox[2]

    @property
    def h(self) -> int:
        return self.bbox[3]

    @property
    def right(self) -> int:
        return self.bbox[0] + self.bbox[2]

    @property
    def bottom(self) -> int:
        return self.bbox[1] + self.bbox[3]


class PageLayout(object):
    """The positioned text boxes of a memory page, in reading order.

    Attributes:
        boxes (tuple of LayoutBox): The text boxes, in reading order.
        canvas (tuple of int): The page size, as ``(width, height)``.
        style (StyleSheet): The style sheet the page was laid out with.
        markers (tuple of tuple of int): The bullet markers, as ``(x, y,
            size)`` squares.

    """

    boxes: Tuple[LayoutBox, ...]
    canvas: Tuple[int, int]
    style: StyleSheet
    markers: Tuple[Tuple[int, int, int], ...]

    __slots__ = ("boxes", "canvas", "style", "markers")

    def __init__(
        self,
        boxes: Iterable[LayoutBox],
        canvas: Tuple[int, int],
        style: Optional[StyleSheet] = None,
        markers: Iterable[Tuple[int, int, int]] = (),
    ):
        self.boxes = tuple(boxes)
        self.canvas = canvas
        self.style = style if style is not None else StyleSheet.default()
        self.markers = tuple(markers)

    def __repr__(self) -> str:
        return f"<PageLayout {self.canvas[0]}x{self.canvas[1]} ({len(self.boxes)} boxes)>"

    def __len__(self) -> int:
        return len(self.boxes)

    def __iter__(self) -> Iterator[LayoutBox]:
        return iter(self.boxes)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PageLayout):
            return (self.boxes, self.canvas, self.markers) == (
                other.boxes,
                other.canvas,
                other.markers,
            )
        return False

    def __hash__(self) -> int:
        return hash((PageLayout, self.boxes, self.canvas))

    @property
    def width(self) -> int:
        return self.canvas[0]

    @property
    def height(self) -> int:
        return self.canvas[1]

    @property
    def text(self) -> str:
        """`str`: The text of the page, in reading order."""
        return join_boxes(self.boxes)


class RegionMap(typing.NamedTuple):
    """The boxes of a page, partitioned by priority class."""

    crucial_boxes: Tuple[LayoutBox, ...]
    detailed_boxes: Tuple[LayoutBox, ...]


def join_boxes(boxes: Iterable[LayoutBox]) -> str:
    """Join the text of consecutive boxes, respecting glued words."""
    parts: List[str] = []
    for box in boxes:
        if parts and not box.joined:
            parts.append(" ")
        parts.append(box.text)
    return "".join(parts)


def glyph_run_area(glyph_count: int, scale: float, style: Optional[StyleSheet] = None) -> int:
    """Get the area in pixels covered by a run of glyphs at a given scale.

    Example:
        >>> from memocr.render import glyph_run_area
        >>> glyph_run_area(5, 1.0)
        640
        >>> glyph_run_area(5, 2.0)
        2560

    """
    if glyph_count < 0:
        raise ValueError("`glyph_count` cannot be negative")
    if scale <= 0:
        raise ValueError("`scale` must be strictly positive")
    style = style if style is not None else StyleSheet.default()
    width, height = style.cell_size(scale)
    return glyph_count * width * height


def region_map(layout: PageLayout) -> RegionMap:
    """Partition the boxes of a page by their priority class."""
    crucial = tuple(b for b in layout.boxes if b.priority is PriorityClass.CRUCIAL)
    detailed = tuple(b for b in layout.boxes if b.priority is not PriorityClass.CRUCIAL)
    return RegionMap(crucial, detailed)


# --- Line breaking ----------------------------------------------------------


def _words(block: Block) -> List[_Word]:
    words: List[_Word] = []
    current: _Word = []
    for index, span in enumerate(block.spans):
        for match in _TOKENS.finditer(span.text):
            token = match.group(0)
            if token.isspace():
                if current:
                    words.append(current)
                    current = []
            else:
                current.append((index, token))
    if current:
        words.append(current)
    return words


def _hard_break(word: _Word, columns: int) -> List[_Word]:
    chars = [(index, char) for index, text in word for char in text]
    parts: List[_Word] = []
    for start in range(0, len(chars), columns):
        part: _Word = []
        for index, char in chars[start : start + columns]:
            if part and part[-1][0] == index:
                part[-1] = (index, part[-1][1] + char)
            else:
                part.append((index, char))
        parts.append(part)
    return parts


def _wrap(
    words: Sequence[_Word], columns: int, cell_width: int, hard_break: bool
) -> List[List[Tuple[_Word, bool]]]:
    lines: List[List[Tuple[_Word, bool]]] = []
    line: List[Tuple[_Word, bool]] = []
    used = 0

    for word in words:
        length = sum(len(text) for _, text in word)
        if length > columns:
            text = "".join(text for _, text in word)
            if not hard_break:
                raise WordTooWide(text, length * cell_width, columns * cell_width)
            warnings.warn(
                f"breaking word {text[:20]!r} wider than the page",
                LayoutWarning,
                stacklevel=4,
            )
            if line:
                lines.append(line)
            parts = _hard_break(word, columns)
            lines.extend([(part, i > 0)] for i, part in enumerate(parts))
            line = lines.pop()
            used = sum(len(text) for _, text in parts[-1])
            continue
        needed = length if not line else used + 1 + length
        if needed <= columns:
            line.append((word, False))
            used = needed
        else:
            lines.append(line)
            line, used = [(word, False)], length

    if line:
        lines.append(line)
    return lines


def _place(
    line: Sequence[Tuple[_Word, bool]],
    block: Block,
    left: int,
    top: int,
    cell: Tuple[int, int],
    scale: float,
    cfg: PriorityConfig,
) -> List[LayoutBox]:
    # runs are [span index, text, start column, joined]
    runs: List[list] = []
    column = 0
    for word_index, (pieces, continued) in enumerate(line):
        for piece_index, (span_index, text) in enumerate(pieces):
            if piece_index == 0 and word_index > 0:
                column += 1
                if runs[-1][0] == span_index:
                    runs[-1][1] += " " + text
                    column += len(text)
                    continue
            joined = piece_index > 0 or continued
            runs.append([span_index, text, column, joined])
            column += len(text)

    width, height = cell
    boxes = []
    for span_index, text, start, joined in runs:
        span = block.spans[span_index]
        boxes.append(
            LayoutBox(
                block.id,
                span_index,
                text,
                (left + start * width, top, len(text) * width, height),
                scale,
                priority_class(block, span, cfg),
                bold=span.bold,
                joined=joined,
            )
        )
    return boxes


def layout(
    tree: SalienceTree,
    style: Optional[StyleSheet] = None,
    cfg: Optional[PriorityConfig] = None,
    hard_break: bool = False,
) -> PageLayout:
    """Lay out a salience tree on a page of fixed width.

    Words are wrapped greedily at the usable width of the page. Every
    line is followed by ``style.line_gap`` pixels, and headings get twice
    that space above them. Bullets are indented by ``style.bullet_indent``
    pixels per nesting level, plus one level for their marker.

    Arguments:
        tree (SalienceTree): The parsed memory to lay out.
        style (StyleSheet, optional): The page geometry. Defaults to
            `StyleSheet.default`.
        cfg (PriorityConfig, optional): The rule used to assign a
            priority class to every box. Defaults to
            `PriorityConfig.default`.
        hard_break (bool): Break words wider than the page over several
            lines with a `LayoutWarning`, instead of raising an error.

    Raises:
        WordTooWide: When a word does not fit on a single line and
            ``hard_break`` is `False`.

    Example:
        >>> from memocr.render import layout
        >>> page = layout(memocr.parse("ab"))
        >>> page.boxes[0].bbox
        (16, 16, 16, 16)
        >>> page.canvas
        (768, 48)

    """
    style = style if style is not None else StyleSheet.default()
    cfg = cfg if cfg is not None else PriorityConfig.default()

    boxes: List[LayoutBox] = []
    markers: List[Tuple[int, int, int]] = []
    top = style.margin

    for block in tree:
        scale = style.scale_of(block.style_key)
        cell = width, height = style.cell_size(scale)

        indent = 0
        if block.kind == "bullet":
            depth = typing.cast(int, block.depth)
            indent = min(style.bullet_indent * (depth + 1), style.usable_width - width)
            indent = max(indent, 0)
        left = style.margin + indent
        columns = max(1, (style.canvas_width - style.margin - left) // width)

        if block.kind == "heading":
            top += 2 * style.line_gap

        lines = _wrap(_words(block), columns, width, hard_break)
        if lines and block.kind == "bullet":
            size = max(2, height // 4)
            if style.bullet_indent >= size + 2:
                x = left - (style.bullet_indent + size) // 2
                markers.append((x, top + (height - size) // 2, size))

        for line in lines:
            boxes.extend(_place(line, block, left, top, cell, scale, cfg))
            top += height + style.line_gap

    canvas_height = boxes[-1].bottom + style.margin if boxes else 2 * style.margin
    return PageLayout(boxes, (style.canvas_width, canvas_height), style, markers)
