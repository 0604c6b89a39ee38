"""Visual-token budgets, budget-constrained resizing and legibility.

A memory image is read by a vision encoder that cuts it into square
patches of ``patch_side`` pixels, every patch costing one visual token.
The functions of this module convert token budgets to pixel counts, resize
rendered memories until they fit a budget, and predict which text boxes
remain readable at the resulting scale.

Example:
    >>> memocr.max_pixels(16)
    12544
    >>> memocr.visual_token_count(784, 1024)
    1036

"""

import math
import typing
from typing import Dict, List, Optional, Tuple

import numpy

from .render.page import LayoutBox, PageLayout
from .render.raster import MemoryImage
from .utils.errors import InvalidBudget
from .utils.meta import roundrepr, typechecked

__all__ = [
    "PATCH_SIDE",
    "DEFAULT_BUDGETS",
    "BudgetSchedule",
    "PatchGrid",
    "LegibilityModel",
    "FitResult",
    "max_pixels",
    "visual_token_count",
    "patch_grid",
    "fit_dimensions",
    "fit_to_budget",
    "resize",
    "downsample",
    "legible_boxes",
]

PATCH_SIDE = 28
DEFAULT_BUDGETS: Tuple[int, ...] = (16, 64, 256, 1024)

# iterations of the scale bisection, enough to exhaust float precision
_BISECTION_STEPS = 64


def _check_budget(budget: int) -> None:
    if budget < 1:
        raise InvalidBudget(f"budget must be at least one token, got {budget}")


@roundrepr
class BudgetSchedule(object):
    """The budget-to-resolution schedule of a vision encoder.

    Example:
        >>> schedule = memocr.BudgetSchedule()
        >>> schedule.rows()
        {16: 12544, 64: 50176, 256: 200704, 1024: 802816}

    """

    patch_side: int
    budgets: Tuple[int, ...]

    __slots__ = ("patch_side", "budgets")

    @typechecked()
    def __init__(self, patch_side: int = PATCH_SIDE, budgets: Tuple[int, ...] = DEFAULT_BUDGETS):
        if patch_side < 1:
            raise ValueError("`patch_side` must be strictly positive")
        for budget in budgets:
            _check_budget(budget)
        self.patch_side = patch_side
        self.budgets = tuple(sorted(set(budgets)))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BudgetSchedule):
            return (self.patch_side, self.budgets) == (other.patch_side, other.budgets)
        return False

    def __hash__(self) -> int:
        return hash((BudgetSchedule, self.patch_side, self.budgets))

    @property
    def pixels_per_token(self) -> int:
        return self.patch_side ** 2

    def max_pixels(self, budget: int) -> int:
        """Get the number of pixels covered by ``budget`` visual tokens.

        Raises:
            InvalidBudget: When ``budget`` is smaller than one token.

        """
        _check_budget(budget)
        return budget * self.pixels_per_token

    def rows(self) -> Dict[int, int]:
        return {budget: self.max_pixels(budget) for budget in self.budgets}

    @classmethod
    def from_dict(cls, data: typing.Mapping[str, typing.Any]) -> "BudgetSchedule":
        """Load a schedule from the dictionary made by `to_dict`."""
        budgets = tuple(int(row["budget"]) for row in data["rows"])
        return cls(int(data["patch_side"]), budgets)

    def to_dict(self) -> Dict[str, object]:
        return {
            "patch_side": self.patch_side,
            "pixels_per_token": self.pixels_per_token,
            "rows": [
                {"budget": budget, "max_pixels": pixels}
                for budget, pixels in self.rows().items()
            ],
        }


class PatchGrid(typing.NamedTuple):
    """The grid of patches covering an image."""

    cols: int
    rows: int

    @property
    def token_count(self) -> int:
        return self.cols * self.rows


@roundrepr
class LegibilityModel(object):
    """A rule deciding whether a text box can still be read.

    A box is legible when its glyph height, multiplied by the scale
    factor the image was resized with, is at least `min_glyph_height`
    pixels.

    """

    min_glyph_height: float

    __slots__ = ("min_glyph_height",)

    @typechecked()
    def __init__(self, min_glyph_height: float = 5.0):
        if min_glyph_height < 0:
            raise ValueError("`min_glyph_height` cannot be negative")
        self.min_glyph_height = min_glyph_height

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LegibilityModel):
            return self.min_glyph_height == other.min_glyph_height
        return False

    def __hash__(self) -> int:
        return hash((LegibilityModel, self.min_glyph_height))

    def is_legible(self, box: LayoutBox, scale_factor: float) -> bool:
        return box.h * scale_factor >= self.min_glyph_height


class FitResult(typing.NamedTuple):
    """A memory image fitted to a budget, with its effective scale factor."""

    image: MemoryImage
    scale_factor: float


# --- Token accounting -------------------------------------------------------


def max_pixels(budget: int, patch_side: int = PATCH_SIDE) -> int:
    """Get the pixel area of ``budget`` visual tokens.

    Raises:
        InvalidBudget: When ``budget`` is smaller than one token.

    """
    _check_budget(budget)
    return budget * patch_side * patch_side


def patch_grid(width: int, height: int, patch_side: int = PATCH_SIDE) -> PatchGrid:
    if width < 1 or height < 1:
        raise ValueError(f"invalid image size: {width}x{height}")
    return PatchGrid(-(-width // patch_side), -(-height // patch_side))


def visual_token_count(width: int, height: int, patch_side: int = PATCH_SIDE) -> int:
    """Get the number of patch tokens needed to encode an image."""
    return patch_grid(width, height, patch_side).token_count


# --- Resizing ---------------------------------------------------------------


def _snap(size: int, scale: float, patch_side: int) -> int:
    out = max(1, math.floor(size * scale))
    if out >= patch_side:
        out -= out % patch_side
    return out


def fit_dimensions(
    width: int, height: int, budget: int, patch_side: int = PATCH_SIDE
) -> Tuple[int, int, float]:
    """Compute the size of an image once fitted to a token budget.

    The output size is obtained by scaling both sides by the same factor,
    then snapping every side of at least one patch down to a multiple of
    the patch side. The largest scale whose snapped size fits the budget
    is found by bisection, since the token count grows monotonically with
    the scale.

    Returns:
        `tuple`: The output ``(width, height)`` and the effective scale
        factor, the smallest of the two side ratios. Images already
        within budget are returned with their size and a factor of 1.

    Example:
        >>> memocr.fit_dimensions(2800, 2800, 256)
        (448, 448, 0.16)
        >>> memocr.fit_dimensions(28, 28, 16)
        (28, 28, 1.0)

    """
    _check_budget(budget)
    if visual_token_count(width, height, patch_side) <= budget:
        return width, height, 1.0

    lo, hi = 0.0, 1.0
    for _ in range(_BISECTION_STEPS):
        mid = (lo + hi) / 2
        w = _snap(width, mid, patch_side)
        h = _snap(height, mid, patch_side)
        if visual_token_count(w, h, patch_side) <= budget:
            lo = mid
        else:
            hi = mid

    out_width = _snap(width, lo, patch_side)
    out_height = _snap(height, lo, patch_side)
    return out_width, out_height, min(out_width / width, out_height / height)


def _area_weights(n_in: int, n_out: int) -> numpy.ndarray:
    edges = numpy.arange(n_out + 1, dtype=numpy.float64) * (n_in / n_out)
    starts, ends = edges[:-1, None], edges[1:, None]
    index = numpy.arange(n_in, dtype=numpy.float64)[None, :]
    overlap = numpy.minimum(ends, index + 1) - numpy.maximum(starts, index)
    weights = numpy.clip(overlap, 0.0, None)
    return typing.cast(numpy.ndarray, weights / weights.sum(axis=1, keepdims=True))


def resize(image: MemoryImage, width: int, height: int) -> MemoryImage:
    """Resize an image with an exact area-average filter.

    Every output pixel is the mean of the input area it covers, fractional
    pixels at the border of that area being weighted by their coverage.
    """
    if width < 1 or height < 1:
        raise ValueError(f"invalid output size: {width}x{height}")
    if (width, height) == image.size:
        return image
    wy = _area_weights(image.height, height)
    wx = _area_weights(image.width, width)
    out = wy @ image.pixels.astype(numpy.float64) @ wx.T
    return MemoryImage(numpy.clip(numpy.rint(out), 0, 255).astype(numpy.uint8))


def downsample(image: MemoryImage, factor_per_dim: float) -> MemoryImage:
    """Shrink an image by the same factor along both dimensions.

    Example:
        >>> image = memocr.MemoryImage.blank(112, 112)
        >>> memocr.downsample(image, 4).size
        (28, 28)

    """
    if factor_per_dim < 1:
        raise ValueError("`factor_per_dim` must be at least 1")
    width = max(1, math.floor(image.width / factor_per_dim))
    height = max(1, math.floor(image.height / factor_per_dim))
    return resize(image, width, height)


def fit_to_budget(
    image: MemoryImage, budget: int, patch_side: int = PATCH_SIDE
) -> FitResult:
    """Downsample a memory image until it fits a visual-token budget.

    Raises:
        InvalidBudget: When ``budget`` is smaller than one token.

    """
    width, height, factor = fit_dimensions(image.width, image.height, budget, patch_side)
    if factor == 1.0 and (width, height) == image.size:
        return FitResult(image, 1.0)
    return FitResult(resize(image, width, height), factor)


# --- Legibility -------------------------------------------------------------


def legible_boxes(
    layout: PageLayout,
    scale_factor: float,
    model: Optional[LegibilityModel] = None,
) -> List[LayoutBox]:
    """Get the boxes of a page that remain legible at a scale factor.

    Example:
        >>> page = memocr.render.layout(memocr.parse("# Gene MacLellan\\n\\nbody"))
        >>> [box.text for box in memocr.legible_boxes(page, 0.25)]
        ['Gene MacLellan']

    """
    if not 0 < scale_factor <= 1:
        raise ValueError("`scale_factor` must be in (0, 1]")
    model = model if model is not None else LegibilityModel()
    return [box for box in layout.boxes if model.is_legible(box, scale_factor)]
