import io
import unittest

import numpy
import PIL.Image

import memocr
from memocr.render import MemoryImage, layout, rasterize
from memocr.render.style import DEFAULT_SCALES


class TestMemoryImage(unittest.TestCase):

    def test_blank(self):
        image = MemoryImage.blank(30, 20)
        self.assertEqual(image.size, (30, 20))
        self.assertEqual(image.ink(), 0)

    def test_invalid_pixels(self):
        self.assertRaises(ValueError, MemoryImage, numpy.zeros((2, 2, 3), dtype=numpy.uint8))
        self.assertRaises(ValueError, MemoryImage, numpy.zeros((2, 2), dtype=numpy.float64))
        self.assertRaises(ValueError, MemoryImage, numpy.zeros((0, 2), dtype=numpy.uint8))

    def test_immutable(self):
        pixels = numpy.full((4, 4), 255, dtype=numpy.uint8)
        image = MemoryImage(pixels)
        pixels[0, 0] = 0
        self.assertEqual(image.ink(), 0)
        with self.assertRaises(ValueError):
            image.pixels[0, 0] = 0

    def test_equality(self):
        self.assertEqual(MemoryImage.blank(3, 3), MemoryImage.blank(3, 3))
        self.assertNotEqual(MemoryImage.blank(3, 3), MemoryImage.blank(9, 1))
        self.assertEqual(hash(MemoryImage.blank(3, 3)), hash(MemoryImage.blank(3, 3)))

    def test_png(self):
        image = rasterize(layout(memocr.parse("# Snowbird\n\nby Gene MacLellan")))
        data = image.to_png()
        self.assertTrue(data.startswith(b"\x89PNG\r\n\x1a\n"))
        with PIL.Image.open(io.BytesIO(data)) as decoded:
            self.assertEqual(decoded.mode, "L")
            self.assertEqual(decoded.size, image.size)
        self.assertEqual(MemoryImage.from_png(data), image)

    def test_png_deterministic(self):
        tree = memocr.parse("wrote **Snowbird** in 1969")
        self.assertEqual(rasterize(layout(tree)).to_png(), rasterize(layout(tree)).to_png())


class TestRasterize(unittest.TestCase):

    def test_empty_page(self):
        image = rasterize(layout(memocr.parse("")))
        self.assertEqual(image.size, (768, 32))
        self.assertEqual(image.ink(), 0)

    def test_binary_pixels(self):
        image = rasterize(layout(memocr.parse("# A\n\nb **c**\n\n- d")))
        self.assertEqual(set(numpy.unique(image.pixels)), {0, 255})

    def test_ink_inside_boxes(self):
        page = layout(memocr.parse("# Title\n\nsome text"))
        image = rasterize(page)
        mask = numpy.zeros(image.pixels.shape, dtype=bool)
        for box in page:
            mask[box.y : box.bottom, box.x : box.right] = True
        self.assertFalse((image.pixels[~mask] == 0).any())

    def test_bold_adds_ink(self):
        plain = rasterize(layout(memocr.parse("word")))
        bold = rasterize(layout(memocr.parse("**word**")))
        self.assertGreater(bold.ink(), plain.ink())

    def test_bold_stroke_capped_by_cell(self):
        scales = {kind: 0.25 for kind in DEFAULT_SCALES}
        tree = memocr.parse("**word**")
        wide = rasterize(layout(tree, memocr.StyleSheet(scales=scales, bold_stroke=8)))
        narrow = rasterize(layout(tree, memocr.StyleSheet(scales=scales, bold_stroke=2)))
        self.assertEqual(wide, narrow)

    def test_heading_ink_scales(self):
        body = rasterize(layout(memocr.parse("A"))).ink()
        heading = rasterize(layout(memocr.parse("# A"))).ink()
        self.assertEqual(heading, 4 * body)

    def test_bullet_marker(self):
        page = layout(memocr.parse("- item"))
        image = rasterize(page)
        x, y, size = page.markers[0]
        self.assertTrue((image.pixels[y : y + size, x : x + size] == 0).all())
