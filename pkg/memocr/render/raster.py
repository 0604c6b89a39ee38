"""Rasterization of page layouts to grayscale memory images.
"""

import hashlib
import io
import typing
from typing import Union

import numpy
import PIL.Image

from .font import encode, scaled_atlas
from .page import LayoutBox, PageLayout

__all__ = ["MemoryImage", "rasterize", "BACKGROUND", "INK"]

BACKGROUND = 255
INK = 0


class MemoryImage(object):
    """An immutable 8-bit grayscale image of a rendered memory.

    Attributes:
        pixels (numpy.ndarray): The pixel buffer, as a read-only array of
            ``uint8`` with shape ``(height, width)``, in row-major order.

    """

    pixels: numpy.ndarray

    __slots__ = ("pixels", "_hash")

    @classmethod
    def blank(cls, width: int, height: int) -> "MemoryImage":
        """Create an image filled with the background color."""
        return cls(numpy.full((height, width), BACKGROUND, dtype=numpy.uint8))

    @classmethod
    def from_png(cls, data: Union[bytes, typing.BinaryIO]) -> "MemoryImage":
        """Decode a PNG image, converting it to grayscale if needed."""
        handle = io.BytesIO(data) if isinstance(data, bytes) else data
        with PIL.Image.open(handle) as image:
            return cls(numpy.asarray(image.convert("L"), dtype=numpy.uint8))

    def __init__(self, pixels: numpy.ndarray):
        if pixels.ndim != 2 or pixels.dtype != numpy.uint8:
            raise ValueError("pixels must be a 2D array of uint8")
        if pixels.size == 0:
            raise ValueError("cannot create an empty image")
        self.pixels = numpy.array(pixels, copy=True, order="C")
        self.pixels.setflags(write=False)
        self._hash: typing.Optional[str] = None

    def __repr__(self) -> str:
        return f"<MemoryImage {self.width}x{self.height} sha256:{self.content_hash[:12]}>"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MemoryImage):
            return self.content_hash == other.content_hash
        return False

    def __hash__(self) -> int:
        return hash((MemoryImage, self.content_hash))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def size(self) -> typing.Tuple[int, int]:
        """`tuple` of `int`: The ``(width, height)`` of the image."""
        return (self.width, self.height)

    @property
    def content_hash(self) -> str:
        """`str`: The SHA-256 digest of the image size and pixel buffer."""
        if self._hash is None:
            digest = hashlib.sha256(f"{self.width}x{self.height}:".encode("ascii"))
            digest.update(self.pixels.tobytes())
            self._hash = digest.hexdigest()
        return self._hash

    def ink(self, threshold: int = 128) -> int:
        """Count the pixels darker than or equal to ``threshold``."""
        return int(numpy.count_nonzero(self.pixels <= threshold))

    def to_png(self) -> bytes:
        """Encode the image as an 8-bit grayscale, non-interlaced PNG."""
        buffer = io.BytesIO()
        PIL.Image.fromarray(numpy.ascontiguousarray(self.pixels)).save(
            buffer, format="PNG", optimize=False
        )
        return buffer.getvalue()

    def save(self, path: str) -> None:
        with open(path, "wb") as dst:
            dst.write(self.to_png())


def _draw_box(canvas: numpy.ndarray, box: LayoutBox, bold_stroke: int) -> None:
    x, y, w, h = box.bbox
    cell_width = w // len(box.text) if box.text else w
    glyphs = scaled_atlas(cell_width, h)[encode(box.text)]
    # (n, h, cw) -> (h, n * cw)
    mask = glyphs.transpose(1, 0, 2).reshape(h, len(box.text) * cell_width)
    if box.bold and bold_stroke > 0:
        dilated = mask.copy()
        for shift in range(1, min(bold_stroke, cell_width) + 1):
            dilated[:, shift:] |= mask[:, :-shift]
        mask = dilated
    region = canvas[y : y + h, x : x + w]
    region[mask[: region.shape[0], : region.shape[1]]] = INK


def rasterize(layout: PageLayout) -> MemoryImage:
    """Draw a page layout on a white canvas with the embedded font.

    Example:
        >>> from memocr.render import layout, rasterize
        >>> image = rasterize(layout(memocr.parse("# Snowbird")))
        >>> image.size
        (768, 72)
        >>> image.ink() > 0
        True

    """
    width, height = layout.canvas
    canvas = numpy.full((height, width), BACKGROUND, dtype=numpy.uint8)
    for box in layout.boxes:
        if box.text:
            _draw_box(canvas, box, layout.style.bold_stroke)
    for x, y, size in layout.markers:
        canvas[y : y + size, x : x + size] = INK
    return MemoryImage(canvas)
