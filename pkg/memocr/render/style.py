"""Typographic configuration of the memory renderer.
"""

import typing
from typing import Any, Dict, Mapping, Optional, Tuple

from ..utils.meta import roundrepr, typechecked

__all__ = ["StyleSheet", "DEFAULT_SCALES"]

DEFAULT_SCALES: Mapping[str, float] = {
    "h1": 2.0,
    "h2": 1.75,
    "h3": 1.5,
    "h4": 1.25,
    "h5": 1.1,
    "h6": 1.0,
    "paragraph": 1.0,
    "bullet": 1.0,
}

_PRESETS: Dict[str, Dict[str, Any]] = {
    "default": {},
    "uniform": {"scales": {key: 1.0 for key in DEFAULT_SCALES}},
    "wide": {"canvas_width": 1024},
}


class StyleSheet(object):
    """The geometry of a rendered memory page.

    Glyphs are laid out on a monospace grid: a block of kind ``k`` uses
    cells of ``round(base_cell[0] * s)`` by ``round(base_cell[1] * s)``
    pixels, where ``s`` is the scale of ``k`` in `scales`.

    Attributes:
        base_cell (tuple of int): The glyph cell size at scale 1, as
            ``(width, height)`` pixels.
        scales (dict): The font scale of every block kind, keyed by
            ``h1`` to ``h6``, ``paragraph`` and ``bullet``.
        bold_stroke (int): The horizontal dilation of bold glyphs, in
            pixels.
        line_gap (int): The vertical space after every line, in pixels.
            Headings get twice this space above them.
        canvas_width (int): The width of the page, in pixels.
        margin (int): The margin on every side of the page, in pixels.
        bullet_indent (int): The indentation of bullets per depth level,
            in pixels.

    """

    base_cell: Tuple[int, int]
    scales: Dict[str, float]
    bold_stroke: int
    line_gap: int
    canvas_width: int
    margin: int
    bullet_indent: int

    __slots__ = (
        "base_cell",
        "scales",
        "bold_stroke",
        "line_gap",
        "canvas_width",
        "margin",
        "bullet_indent",
    )

    @classmethod
    def default(cls) -> "StyleSheet":
        return cls()

    @classmethod
    def preset(cls, name: str) -> "StyleSheet":
        """Get a named style preset.

        Available presets are ``default``, ``uniform`` (every block kind
        rendered at body size) and ``wide`` (a 1024 pixel canvas).

        Raises:
            ValueError: When no preset exists with the given name.

        """
        try:
            return cls(**_PRESETS[name])
        except KeyError:
            raise ValueError(f"unknown style preset: {name!r}") from None

    @typechecked()
    def __init__(
        self,
        base_cell: Tuple[int, int] = (8, 16),
        scales: Optional[Mapping[str, float]] = None,
        bold_stroke: int = 1,
        line_gap: int = 4,
        canvas_width: int = 768,
        margin: int = 16,
        bullet_indent: int = 16,
    ):
        merged = dict(DEFAULT_SCALES)
        for key, value in (scales or {}).items():
            if key not in DEFAULT_SCALES:
                raise ValueError(f"unknown block kind in scales: {key!r}")
            merged[key] = float(value)

        if len(base_cell) != 2 or min(base_cell) < 1:
            raise ValueError("`base_cell` must be two strictly positive integers")
        if any(value <= 0 for value in merged.values()):
            raise ValueError("all scales must be strictly positive")
        if min(bold_stroke, line_gap, margin, bullet_indent) < 0:
            raise ValueError("strokes, gaps, margins and indents cannot be negative")
        if bold_stroke > base_cell[0]:
            raise ValueError("`bold_stroke` cannot exceed the width of a glyph cell")
        if canvas_width < 2 * margin + base_cell[0] * max(merged.values()):
            raise ValueError("`canvas_width` cannot fit a single glyph")

        self.base_cell = (int(base_cell[0]), int(base_cell[1]))
        self.scales = merged
        self.bold_stroke = bold_stroke
        self.line_gap = line_gap
        self.canvas_width = canvas_width
        self.margin = margin
        self.bullet_indent = bullet_indent

    def __repr__(self) -> str:
        overrides = {k: v for k, v in self.scales.items() if DEFAULT_SCALES[k] != v}
        return roundrepr.make(
            type(self).__name__,
            base_cell=(self.base_cell, (8, 16)),
            scales=(overrides or None, None),
            bold_stroke=(self.bold_stroke, 1),
            line_gap=(self.line_gap, 4),
            canvas_width=(self.canvas_width, 768),
            margin=(self.margin, 16),
            bullet_indent=(self.bullet_indent, 16),
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StyleSheet):
            return self.to_dict() == other.to_dict()
        return False

    def __hash__(self) -> int:
        return hash((StyleSheet, tuple(sorted(self.scales.items())), self.base_cell))

    @property
    def usable_width(self) -> int:
        """`int`: The width available to text, in pixels."""
        return self.canvas_width - 2 * self.margin

    def scale_of(self, kind: str) -> float:
        return self.scales[kind]

    def cell_size(self, scale: float) -> Tuple[int, int]:
        """Get the ``(width, height)`` of a glyph cell at the given scale."""
        return (
            max(1, round(self.base_cell[0] * scale)),
            max(1, round(self.base_cell[1] * scale)),
        )

    def replace(self, **changes: Any) -> "StyleSheet":
        """Get a copy of the style sheet with some attributes changed."""
        options = self.to_dict()
        if "scales" in changes:
            scales = dict(typing.cast(Dict[str, float], options["scales"]))
            scales.update(changes.pop("scales") or {})
            options["scales"] = scales
        options.update(changes)
        options["base_cell"] = tuple(options["base_cell"])
        return type(self)(**options)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "base_cell": list(self.base_cell),
            "scales": dict(self.scales),
            "bold_stroke": self.bold_stroke,
            "line_gap": self.line_gap,
            "canvas_width": self.canvas_width,
            "margin": self.margin,
            "bullet_indent": self.bullet_indent,
        }
