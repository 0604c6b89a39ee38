import os
import unittest

import memocr
from memocr.lifecycle.prompts import build_text_read_prompt, prompt_overhead

from ..utils import DATADIR


class TestPrompts(unittest.TestCase):

    @staticmethod
    def golden(name):
        with open(os.path.join(DATADIR, "prompts", name), encoding="utf-8", newline="") as f:
            return f.read()

    def test_draft_prompt(self):
        prompt = memocr.build_draft_prompt(
            "Who wrote the song Snowbird?",
            "Gene MacLellan wrote the song Snowbird for Anne Murray.",
            "# Notes",
        )
        self.assertMultiLineEqual(prompt, self.golden("draft.txt"))

    def test_read_prompt(self):
        prompt = memocr.build_read_prompt("Who wrote the song Snowbird?")
        self.assertMultiLineEqual(prompt, self.golden("read.txt"))

    def test_braces_kept(self):
        prompt = memocr.build_draft_prompt("{x}?", "{}", "{0}")
        self.assertIn("<problem>\n{x}?\n</problem>", prompt)
        self.assertIn("<memory>\n{0}\n</memory>", prompt)

    def test_text_read_prompt(self):
        prompt = build_text_read_prompt("Who?", "# Gene")
        self.assertIn("<memory>\n# Gene\n</memory>", prompt)
        self.assertIn("\\boxed{}", prompt)
        self.assertTrue(prompt.endswith("<problem>Who?</problem>\n\nYour answer:"))

    def test_prompt_overhead(self):
        small = prompt_overhead("Who?")
        large = prompt_overhead("Who wrote the song Snowbird?")
        self.assertEqual(large - small, 4)
        self.assertGreater(small, 50)
