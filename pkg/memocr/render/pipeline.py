"""The complete Markdown-to-image rendering pipeline.
"""

import statistics
import time
import typing
from typing import Iterable, List, Optional, Sequence

from ..budget import LegibilityModel, fit_to_budget, legible_boxes, visual_token_count
from ..salience import PriorityConfig, SalienceTree, normalize_source, parse
from ..utils.meta import roundrepr
from .page import LayoutBox, PageLayout, layout
from .raster import MemoryImage, rasterize
from .style import StyleSheet

__all__ = ["Renderer", "Rendering", "RenderedMemory", "BenchmarkResult", "benchmark"]


class RenderedMemory(object):
    """A memory image fitted to a visual-token budget.

    This is what a reader receives: the fitted image, along with the page
    layout it was rasterized from and the scale factor applied to it, so
    that readers which do not decode pixels can apply a legibility model
    to the layout instead.

    Attributes:
        layout (PageLayout): The full-resolution page layout.
        image (MemoryImage): The budget-fitted image.
        scale_factor (float): The effective downsampling factor.
        budget (int or None): The visual-token budget the image was
            fitted to, or `None` for a full-resolution render.

    """

    __slots__ = ("layout", "image", "scale_factor", "budget")

    def __init__(
        self,
        layout: PageLayout,
        image: MemoryImage,
        scale_factor: float = 1.0,
        budget: Optional[int] = None,
    ):
        self.layout = layout
        self.image = image
        self.scale_factor = scale_factor
        self.budget = budget

    def __repr__(self) -> str:
        return roundrepr.make(
            type(self).__name__,
            self.image,
            scale_factor=(self.scale_factor, 1.0),
            budget=(self.budget, None),
        )

    @property
    def visual_tokens(self) -> int:
        """`int`: The number of visual tokens the image costs."""
        return visual_token_count(self.image.width, self.image.height)

    def legible_boxes(self, model: Optional[LegibilityModel] = None) -> List[LayoutBox]:
        return legible_boxes(self.layout, self.scale_factor, model)

    def to_png(self) -> bytes:
        return self.image.to_png()


class Rendering(object):
    """A memory rendered at full resolution.

    Attributes:
        tree (SalienceTree): The parsed memory.
        layout (PageLayout): The positioned text boxes.
        image (MemoryImage): The full-resolution image.

    """

    __slots__ = ("tree", "layout", "image")

    def __init__(self, tree: SalienceTree, layout: PageLayout, image: MemoryImage):
        self.tree = tree
        self.layout = layout
        self.image = image

    def __repr__(self) -> str:
        return f"<Rendering {self.image.width}x{self.image.height} ({len(self.tree)} blocks)>"

    def fit(self, budget: Optional[int] = None) -> RenderedMemory:
        """Fit the image to a budget, or keep it full-size without one."""
        if budget is None:
            return RenderedMemory(self.layout, self.image)
        image, factor = fit_to_budget(self.image, budget)
        return RenderedMemory(self.layout, image, factor, budget)


class Renderer(object):
    """A deterministic Markdown-to-image renderer.

    Rendering normalizes the source, parses it, lays it out and rasterizes
    it with the embedded font. Renderers hold no mutable state and can be
    shared between threads.

    Example:
        >>> renderer = memocr.Renderer()
        >>> memory = renderer.render("# Gene MacLellan\\n\\nwrote it").fit(16)
        >>> memory.visual_tokens <= 16
        True

    """

    __slots__ = ("style", "priority", "hard_break")

    def __init__(
        self,
        style: Optional[StyleSheet] = None,
        priority: Optional[PriorityConfig] = None,
        hard_break: bool = True,
    ):
        self.style = style if style is not None else StyleSheet.default()
        self.priority = priority if priority is not None else PriorityConfig.default()
        self.hard_break = hard_break

    def __repr__(self) -> str:
        return roundrepr.make(
            type(self).__name__,
            style=(self.style, StyleSheet.default()),
            priority=(self.priority, PriorityConfig.default()),
            hard_break=(self.hard_break, True),
        )

    def layout(self, markdown: str) -> PageLayout:
        tree = parse(normalize_source(markdown))
        return layout(tree, self.style, self.priority, self.hard_break)

    def render(self, markdown: str) -> Rendering:
        tree = parse(normalize_source(markdown))
        page = layout(tree, self.style, self.priority, self.hard_break)
        return Rendering(tree, page, rasterize(page))


class BenchmarkResult(typing.NamedTuple):
    """The throughput of a renderer over several runs."""

    samples: int
    runs: int
    throughput: Sequence[float]
    latency: Sequence[float]

    @property
    def mean_throughput(self) -> float:
        """`float`: The mean number of samples rendered per second."""
        return statistics.mean(self.throughput)

    @property
    def mean_latency(self) -> float:
        """`float`: The mean time spent per sample, in seconds."""
        return statistics.mean(self.latency)

    def to_dict(self) -> typing.Dict[str, object]:
        return {
            "samples": self.samples,
            "runs": self.runs,
            "throughput": list(self.throughput),
            "latency": list(self.latency),
            "mean_throughput": self.mean_throughput,
            "mean_latency": self.mean_latency,
        }


def benchmark(
    documents: Iterable[str],
    runs: int = 5,
    budget: Optional[int] = None,
    renderer: Optional[Renderer] = None,
) -> BenchmarkResult:
    """Measure the throughput of a renderer on a set of documents.

    Every run renders all documents once, fitting them to ``budget`` when
    one is given, and measures the wall-clock time it took.
    """
    if runs < 1:
        raise ValueError("`runs` must be strictly positive")
    docs = list(documents)
    if not docs:
        raise ValueError("cannot benchmark without documents")
    renderer = renderer if renderer is not None else Renderer()

    throughput, latency = [], []
    for _ in range(runs):
        start = time.perf_counter()
        for doc in docs:
            renderer.render(doc).fit(budget).to_png()
        elapsed = max(time.perf_counter() - start, 1e-9)
        throughput.append(len(docs) / elapsed)
        latency.append(elapsed / len(docs))
    return BenchmarkResult(len(docs), runs, throughput, latency)
