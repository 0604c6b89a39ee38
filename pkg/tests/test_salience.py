import unittest
import warnings

import memocr
from memocr.salience import Block, InlineSpan, PriorityClass, PriorityConfig


class TestNormalizeSource(unittest.TestCase):

    def test_strip_whitespace(self):
        self.assertEqual(memocr.normalize_source("\n\n  # A  \n\n"), "# A")

    def test_strip_enclosing_fence(self):
        raw = "```markdown\n# Gene MacLellan\n\nwrote Snowbird\n```"
        self.assertEqual(memocr.normalize_source(raw), "# Gene MacLellan\n\nwrote Snowbird")

    def test_keep_fence_with_inner_fence(self):
        raw = "```\nsome code\n```python\nprint()\n```"
        self.assertEqual(memocr.normalize_source(raw), raw)

    def test_idempotent(self):
        for raw in [
            "```markdown\n# A\n```",
            "```\n```\ninner\n```\n```",
            "   plain text   ",
            "",
        ]:
            once = memocr.normalize_source(raw)
            self.assertEqual(memocr.normalize_source(once), once, raw)


class TestParse(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        warnings.simplefilter("error")

    @classmethod
    def tearDownClass(cls):
        warnings.simplefilter(warnings.defaultaction)

    def test_empty(self):
        self.assertEqual(len(memocr.parse("")), 0)
        self.assertEqual(len(memocr.parse("\n\n   \n")), 0)

    def test_headings(self):
        tree = memocr.parse("# One\n## Two\n###### Six")
        self.assertEqual([b.kind for b in tree], ["heading"] * 3)
        self.assertEqual([b.level for b in tree], [1, 2, 6])
        self.assertEqual([b.style_key for b in tree], ["h1", "h2", "h6"])

    def test_seven_hashes_is_a_paragraph(self):
        tree = memocr.parse("####### Seven")
        self.assertEqual(tree[0].kind, "paragraph")
        self.assertEqual(tree[0].text, "####### Seven")

    def test_empty_heading_is_skipped(self):
        tree = memocr.parse("#\n\ntext")
        self.assertEqual(len(tree), 1)
        self.assertEqual(tree[0].kind, "paragraph")

    def test_paragraph_lines_are_joined(self):
        tree = memocr.parse("first line\nsecond line\n\nthird")
        self.assertEqual([b.text for b in tree], ["first line second line", "third"])

    def test_bullets(self):
        tree = memocr.parse("- top\n  - nested\n    * deeper\n- back")
        self.assertEqual([b.kind for b in tree], ["bullet"] * 4)
        self.assertEqual([b.depth for b in tree], [0, 1, 2, 0])
        self.assertEqual(tree[1].text, "nested")

    def test_bold_spans(self):
        tree = memocr.parse("some **bold** text")
        self.assertEqual(
            tree[0].spans,
            (InlineSpan("some "), InlineSpan("bold", True), InlineSpan(" text")),
        )

    def test_unmatched_bold_is_literal(self):
        tree = memocr.parse("**unclosed marker")
        self.assertEqual(tree[0].spans, (InlineSpan("**unclosed marker"),))

    def test_block_ids(self):
        tree = memocr.parse("# A\n\nb\n\n- c")
        self.assertEqual([b.id for b in tree], [0, 1, 2])

    def test_source_is_kept(self):
        self.assertEqual(memocr.parse("# A").source, "# A")

    def test_to_markdown_reparses(self):
        text = "# Gene\n\nwrote **Snowbird** in 1969\n\n- for Anne\n  - Murray\n\n### notes"
        tree = memocr.parse(text)
        self.assertEqual(memocr.parse(tree.to_markdown()), tree)


class TestDataModel(unittest.TestCase):

    def test_inline_span_newline(self):
        self.assertRaises(ValueError, InlineSpan, "a\nb")

    def test_block_invalid_kind(self):
        self.assertRaises(ValueError, Block, 0, "table", [InlineSpan("x")])

    def test_block_invalid_level(self):
        self.assertRaises(ValueError, Block, 0, "heading", [InlineSpan("x")], level=7)
        self.assertRaises(ValueError, Block, 0, "heading", [InlineSpan("x")])

    def test_block_invalid_depth(self):
        self.assertRaises(ValueError, Block, 0, "bullet", [InlineSpan("x")], depth=-1)

    def test_block_level_only_for_headings(self):
        block = Block(0, "paragraph", [InlineSpan("x")], level=1)
        self.assertIsNone(block.level)

    def test_priority_config_range(self):
        self.assertRaises(ValueError, PriorityConfig, 7)
        self.assertRaises(ValueError, PriorityConfig, -1)

    @unittest.skipUnless(__debug__, "no type checks in optimized mode")
    def test_priority_config_types(self):
        self.assertRaises(TypeError, PriorityConfig, "2")
        self.assertRaises(TypeError, PriorityConfig, True)

    def test_priority_config_repr(self):
        self.assertEqual(repr(PriorityConfig()), "PriorityConfig()")
        self.assertEqual(
            repr(PriorityConfig.strict()),
            "PriorityConfig(bold=False, max_heading_level=1)",
        )


class TestPriorityClass(unittest.TestCase):

    def setUp(self):
        self.tree = memocr.parse("# H1\n\n## H2\n\n### H3\n\nplain **bold**")

    def classes(self, cfg=None):
        return [
            [memocr.priority_class(block, span, cfg) for span in block.spans]
            for block in self.tree
        ]

    def test_default(self):
        C, D = PriorityClass.CRUCIAL, PriorityClass.DETAILED
        self.assertEqual(self.classes(), [[C], [C], [D], [D, C]])

    def test_strict(self):
        C, D = PriorityClass.CRUCIAL, PriorityClass.DETAILED
        self.assertEqual(self.classes(PriorityConfig.strict()), [[C], [D], [D], [D, D]])

    def test_no_crucial_heading(self):
        cfg = PriorityConfig(0, bold=False)
        flat = [c for row in self.classes(cfg) for c in row]
        self.assertTrue(all(c is PriorityClass.DETAILED for c in flat))

    def test_str(self):
        self.assertEqual(str(PriorityClass.CRUCIAL), "crucial")
        self.assertIs(PriorityClass("detailed"), PriorityClass.DETAILED)
