import unittest
import warnings

import memocr
from memocr.utils.errors import WordTooWide
from memocr.render import StyleSheet, glyph_run_area, join_boxes, layout, region_map
from memocr.salience import PriorityClass, PriorityConfig
from memocr.utils.warnings import LayoutWarning


class TestLayout(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        warnings.simplefilter("error")

    @classmethod
    def tearDownClass(cls):
        warnings.simplefilter(warnings.defaultaction)

    def test_empty(self):
        page = layout(memocr.parse(""))
        self.assertEqual(len(page), 0)
        self.assertEqual(page.canvas, (768, 32))
        self.assertEqual(page.text, "")

    def test_single_paragraph(self):
        page = layout(memocr.parse("ab"))
        self.assertEqual(len(page), 1)
        self.assertEqual(page.boxes[0].bbox, (16, 16, 16, 16))
        self.assertEqual(page.canvas, (768, 48))

    def test_heading_spacing(self):
        page = layout(memocr.parse("# A\n\nb"))
        heading, body = page.boxes
        self.assertEqual(heading.bbox, (16, 24, 16, 32))
        self.assertEqual(heading.scale, 2.0)
        self.assertEqual(body.bbox, (16, 60, 8, 16))
        self.assertEqual(page.canvas, (768, 92))

    def test_wrapping(self):
        page = layout(memocr.parse(" ".join(["abcd"] * 20)))
        self.assertEqual(len(page), 2)
        first, second = page.boxes
        self.assertEqual(first.text, " ".join(["abcd"] * 18))
        self.assertEqual(first.bbox, (16, 16, 89 * 8, 16))
        self.assertEqual(second.text, "abcd abcd")
        self.assertEqual(second.bbox, (16, 36, 72, 16))
        self.assertLessEqual(max(box.right for box in page), 768 - 16)

    def test_spans_become_boxes(self):
        page = layout(memocr.parse("plain **bold** end"))
        self.assertEqual([b.text for b in page], ["plain", "bold", "end"])
        self.assertEqual([b.x for b in page], [16, 64, 104])
        self.assertEqual([b.bold for b in page], [False, True, False])
        self.assertEqual(
            [b.priority for b in page],
            [PriorityClass.DETAILED, PriorityClass.CRUCIAL, PriorityClass.DETAILED],
        )
        self.assertEqual(page.text, "plain bold end")

    def test_glued_word(self):
        page = layout(memocr.parse("a**b**c d"))
        self.assertEqual([b.text for b in page], ["a", "b", "c d"])
        self.assertEqual([b.joined for b in page], [False, True, True])
        self.assertEqual(page.text, "abc d")

    def test_word_too_wide(self):
        tree = memocr.parse("x" * 100)
        with self.assertRaises(WordTooWide):
            layout(tree)

    def test_hard_break(self):
        tree = memocr.parse("x" * 100)
        with self.assertWarns(LayoutWarning):
            page = layout(tree, hard_break=True)
        first, second = page.boxes
        self.assertEqual(len(first.text), 92)
        self.assertEqual(len(second.text), 8)
        self.assertFalse(first.joined)
        self.assertTrue(second.joined)
        self.assertEqual(second.y, 36)
        self.assertEqual(page.text, "x" * 100)

    def test_bullets(self):
        page = layout(memocr.parse("- item\n  - nested"))
        item, nested = page.boxes
        self.assertEqual(item.x, 32)
        self.assertEqual(nested.x, 48)
        self.assertEqual(page.markers[0], (22, 22, 4))
        self.assertEqual(len(page.markers), 2)

    def test_boxes_inside_canvas(self):
        text = "# Title\n\n## Sub **bold**\n\n" + " ".join(["word"] * 200) + "\n\n- a\n  - b"
        page = layout(memocr.parse(text))
        for box in page:
            self.assertGreaterEqual(box.x, 16)
            self.assertLessEqual(box.right, page.width - 16)
            self.assertLessEqual(box.bottom, page.height - 16)

    def test_reading_order(self):
        page = layout(memocr.parse("# A\n\nb c\n\n## D"))
        ys = [box.y for box in page]
        self.assertEqual(ys, sorted(ys))
        self.assertEqual([box.block_id for box in page], [0, 1, 2])

    def test_priority_config(self):
        tree = memocr.parse("## Sub\n\n**bold**")
        default = layout(tree)
        strict = layout(tree, cfg=PriorityConfig.strict())
        self.assertEqual(len(region_map(default).crucial_boxes), 2)
        self.assertEqual(len(region_map(strict).crucial_boxes), 0)

    def test_style(self):
        page = layout(memocr.parse("ab"), StyleSheet(margin=0, canvas_width=100))
        self.assertEqual(page.boxes[0].bbox, (0, 0, 16, 16))
        self.assertEqual(page.canvas, (100, 16))

    def test_deterministic(self):
        tree = memocr.parse("# Gene\n\nwrote **Snowbird**\n\n- for Anne Murray")
        self.assertEqual(layout(tree), layout(tree))


class TestRegionMap(unittest.TestCase):

    def test_partition(self):
        page = layout(memocr.parse("# Key fact\n\nsome details and **more**"))
        regions = region_map(page)
        self.assertEqual(len(regions.crucial_boxes) + len(regions.detailed_boxes), len(page))
        self.assertEqual(join_boxes(regions.crucial_boxes), "Key fact more")
        self.assertEqual(join_boxes(regions.detailed_boxes), "some details and")


class TestGlyphRunArea(unittest.TestCase):

    def test_area(self):
        self.assertEqual(glyph_run_area(0, 1.0), 0)
        self.assertEqual(glyph_run_area(10, 1.0), 1280)
        self.assertEqual(glyph_run_area(10, 2.0), 4 * glyph_run_area(10, 1.0))

    def test_invalid(self):
        self.assertRaises(ValueError, glyph_run_area, -1, 1.0)
        self.assertRaises(ValueError, glyph_run_area, 1, 0.0)
