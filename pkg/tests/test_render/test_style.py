import unittest

from memocr.render import StyleSheet


class TestStyleSheet(unittest.TestCase):

    def test_default_repr(self):
        self.assertEqual(repr(StyleSheet()), "StyleSheet()")
        self.assertEqual(repr(StyleSheet.preset("wide")), "StyleSheet(canvas_width=1024)")

    def test_presets(self):
        self.assertEqual(StyleSheet.preset("default"), StyleSheet.default())
        self.assertEqual(StyleSheet.preset("wide"), StyleSheet(canvas_width=1024))
        uniform = StyleSheet.preset("uniform")
        self.assertTrue(all(scale == 1.0 for scale in uniform.scales.values()))

    def test_unknown_preset(self):
        self.assertRaises(ValueError, StyleSheet.preset, "fancy")

    def test_cell_size(self):
        style = StyleSheet()
        self.assertEqual(style.cell_size(1.0), (8, 16))
        self.assertEqual(style.cell_size(2.0), (16, 32))
        self.assertEqual(style.cell_size(1.1), (9, 18))
        self.assertEqual(style.cell_size(0.01), (1, 1))

    def test_usable_width(self):
        self.assertEqual(StyleSheet().usable_width, 736)
        self.assertEqual(StyleSheet(margin=0).usable_width, 768)

    def test_partial_scales(self):
        style = StyleSheet(scales={"h1": 3})
        self.assertEqual(style.scale_of("h1"), 3.0)
        self.assertEqual(style.scale_of("h2"), 1.75)
        self.assertEqual(repr(style), "StyleSheet(scales={'h1': 3.0})")

    def test_invalid_values(self):
        self.assertRaises(ValueError, StyleSheet, scales={"table": 1.0})
        self.assertRaises(ValueError, StyleSheet, scales={"h1": 0.0})
        self.assertRaises(ValueError, StyleSheet, margin=-1)
        self.assertRaises(ValueError, StyleSheet, base_cell=(0, 16))
        self.assertRaises(ValueError, StyleSheet, canvas_width=40)
        self.assertRaises(ValueError, StyleSheet, bold_stroke=9)
        self.assertRaises(ValueError, StyleSheet, base_cell=(4, 8), bold_stroke=5)
        self.assertEqual(StyleSheet(bold_stroke=8).bold_stroke, 8)

    @unittest.skipUnless(__debug__, "no type checks in optimized mode")
    def test_invalid_types(self):
        self.assertRaises(TypeError, StyleSheet, base_cell=[8, 16])
        self.assertRaises(TypeError, StyleSheet, canvas_width="768")

    def test_replace(self):
        style = StyleSheet().replace(line_gap=8, scales={"paragraph": 1.5})
        self.assertEqual(style.line_gap, 8)
        self.assertEqual(style.scale_of("paragraph"), 1.5)
        self.assertEqual(style.scale_of("h1"), 2.0)
        self.assertEqual(StyleSheet().line_gap, 4)

    def test_to_dict(self):
        data = StyleSheet().to_dict()
        self.assertEqual(data["base_cell"], [8, 16])
        self.assertEqual(data["canvas_width"], 768)
        self.assertEqual(StyleSheet().replace(**{}), StyleSheet())
