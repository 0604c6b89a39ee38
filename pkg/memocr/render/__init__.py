"""Deterministic rendering of Markdown memories to grayscale images.
"""

from .style import StyleSheet
from .page import (
    LayoutBox,
    PageLayout,
    RegionMap,
    glyph_run_area,
    join_boxes,
    layout,
    region_map,
)
from .raster import MemoryImage, rasterize
from .pipeline import BenchmarkResult, RenderedMemory, Renderer, Rendering, benchmark

__all__ = [
    "StyleSheet",
    "LayoutBox",
    "PageLayout",
    "RegionMap",
    "MemoryImage",
    "Renderer",
    "Rendering",
    "RenderedMemory",
    "BenchmarkResult",
    "layout",
    "rasterize",
    "glyph_run_area",
    "region_map",
    "join_boxes",
    "benchmark",
]
