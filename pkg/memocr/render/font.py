"""The embedded bitmap font used to rasterize memories.

Glyphs are stored as the classic 5x7 column-major dot matrix (one byte per
column, least significant bit on top) for printable ASCII, plus a hollow
box used as the replacement glyph for every other character. The atlas
expands them into 8x16 cells: columns 1 to 5 hold the dots, and every dot
row is doubled to fill rows 1 to 14.
"""

import functools
import typing

import numpy

__all__ = [
    "CELL_WIDTH",
    "CELL_HEIGHT",
    "REPLACEMENT",
    "atlas",
    "encode",
    "ink_count",
    "scaled_atlas",
]

CELL_WIDTH = 8
CELL_HEIGHT = 16

FIRST = 0x20
LAST = 0x7E
REPLACEMENT = LAST - FIRST + 1

_GLYPHS = bytes.fromhex(
    # 0x20 - 0x2F
    "0000000000" "00005f0000" "0007000700" "147f147f14"
    "242a7f2a12" "2313086462" "3649552250" "0005030000"
    "001c224100" "0041221c00" "082a1c2a08" "08083e0808"
    "0050300000" "0808080808" "0060600000" "2010080402"
    # 0x30 - 0x3F
    "3e5149453e" "00427f4000" "4261514946" "2141454b31"
    "1814127f10" "2745454539" "3c4a494930" "0171090503"
    "3649494936" "064949291e" "0036360000" "0056360000"
    "0814224100" "1414141414" "0041221408" "0201510906"
    # 0x40 - 0x4F
    "324979413e" "7e1111117e" "7f49494936" "3e41414122"
    "7f4141221c" "7f49494941" "7f09090101" "3e41415132"
    "7f0808087f" "00417f4100" "2040413f01" "7f08142241"
    "7f40404040" "7f0204027f" "7f0408107f" "3e4141413e"
    # 0x50 - 0x5F
    "7f09090906" "3e4151215e" "7f09192946" "4649494931"
    "01017f0101" "3f4040403f" "1f2040201f" "7f2018207f"
    "6314081463" "0304780403" "6151494543" "00007f4141"
    "0204081020" "41417f0000" "0402010204" "4040404040"
    # 0x60 - 0x6F
    "0001020400" "2054545478" "7f48444438" "3844444420"
    "384444487f" "3854545418" "087e090102" "081454543c"
    "7f08040478" "00447d4000" "2040443d00" "007f102844"
    "00417f4000" "7c04180478" "7c08040478" "3844444438"
    # 0x70 - 0x7E
    "7c14141408" "081414187c" "7c08040408" "4854545420"
    "043f444020" "3c4040207c" "1c2040201c" "3c4030403c"
    "4428102844" "0c5050503c" "4464544c44" "0008364100"
    "00007f0000" "0041360800" "0201020402"
    # replacement
    "7f4141417f"
)


@functools.lru_cache(maxsize=None)
def atlas() -> numpy.ndarray:
    """Get the glyph atlas, as a boolean array of shape ``(96, 16, 8)``."""
    columns = numpy.frombuffer(_GLYPHS, dtype=numpy.uint8).reshape(-1, 5)
    bits = (columns[:, :, None] >> numpy.arange(7, dtype=numpy.uint8)) & 1
    dots = bits.transpose(0, 2, 1).astype(bool)  # (glyph, row, column)
    cells = numpy.zeros((len(columns), CELL_HEIGHT, CELL_WIDTH), dtype=bool)
    cells[:, 1:15, 1:6] = numpy.repeat(dots, 2, axis=1)
    cells.setflags(write=False)
    return cells


@functools.lru_cache(maxsize=64)
def scaled_atlas(width: int, height: int) -> numpy.ndarray:
    """Get the glyph atlas scaled to cells of the given size.

    Scaling uses nearest-neighbor sampling: the pixel at ``(y, x)`` of a
    scaled cell copies the atlas pixel at ``(y * 16 // height, x * 8 //
    width)``, so integer scales replicate every atlas pixel exactly.
    """
    rows = (numpy.arange(height) * CELL_HEIGHT) // height
    cols = (numpy.arange(width) * CELL_WIDTH) // width
    cells = atlas()[:, rows][:, :, cols]
    cells.setflags(write=False)
    return cells


def encode(text: str) -> numpy.ndarray:
    """Get the atlas index of every character of ``text``."""
    codes = numpy.fromiter(map(ord, text), dtype=numpy.int64, count=len(text))
    inside = (codes >= FIRST) & (codes <= LAST)
    return typing.cast(numpy.ndarray, numpy.where(inside, codes - FIRST, REPLACEMENT))


def ink_count(char: str) -> int:
    """Get the number of ink pixels of a character at scale 1."""
    return int(atlas()[int(encode(char)[0])].sum())
