import math
import unittest

import scipy.stats

from memocr.eval.metrics import (
    extract_boxed,
    normalize_answer,
    relative_drop,
    sem_match,
    ttest_ind,
)
from memocr.utils.errors import DegenerateSamples, UndefinedReference


class TestAnswerMatching(unittest.TestCase):

    def test_normalize(self):
        self.assertEqual(normalize_answer("The  Wild\tOwls!"), "the wild owls")
        self.assertEqual(normalize_answer("..."), "")

    def test_extract_boxed_last(self):
        text = "\\boxed{first} then \\boxed{second}"
        self.assertEqual(extract_boxed(text), "second")

    def test_extract_boxed_nested(self):
        self.assertEqual(extract_boxed("\\boxed{f(x{1})}"), "f(x{1})")

    def test_extract_boxed_unbalanced(self):
        self.assertIsNone(extract_boxed("\\boxed{never closed"))
        self.assertEqual(extract_boxed("\\boxed{ok} \\boxed{open"), "ok")

    def test_sem_match_substring(self):
        self.assertTrue(sem_match("\\boxed{It was Gene MacLellan, in 1969}", ["gene maclellan"]))
        self.assertTrue(sem_match("Gene MacLellan", ["Gene MacLellan"]))

    def test_sem_match_uses_boxed_part(self):
        prediction = "Gene MacLellan is wrong, so \\boxed{Anne Murray}"
        self.assertFalse(sem_match(prediction, ["Gene MacLellan"]))
        self.assertTrue(sem_match(prediction, ["Anne Murray"]))

    def test_sem_match_any_gold(self):
        self.assertTrue(sem_match("\\boxed{Murray}", ["Gene MacLellan", "Murray"]))

    def test_sem_match_empty_gold(self):
        self.assertFalse(sem_match("anything", ["", "  "]))


class TestRelativeDrop(unittest.TestCase):

    def test_drop(self):
        self.assertAlmostEqual(relative_drop(62.2, 74.6), -16.621983914, places=6)
        self.assertEqual(relative_drop(80.0, 80.0), 0.0)
        self.assertAlmostEqual(relative_drop(0.5, 0.4), 25.0)

    def test_zero_reference(self):
        self.assertRaises(UndefinedReference, relative_drop, 10.0, 0.0)
        self.assertRaises(ZeroDivisionError, relative_drop, 10.0, 0)


class TestTTest(unittest.TestCase):

    @staticmethod
    def samples(mean, std):
        # three runs with the given sample mean and sample deviation
        return [mean - std, mean, mean + std]

    def assertMatchesScipy(self, a, b):
        result = ttest_ind(a, b)
        expected = scipy.stats.ttest_ind(a, b, equal_var=False)
        self.assertAlmostEqual(result.statistic, float(expected.statistic))
        self.assertAlmostEqual(result.pvalue, float(expected.pvalue))
        return result

    def test_reported_runs(self):
        ours = self.samples(62.2, 1.1)
        baseline = self.samples(55.4, 1.6)
        result = self.assertMatchesScipy(ours, baseline)
        self.assertGreater(result.statistic, 0)
        self.assertLess(result.pvalue, 0.05)

    def test_close_runs(self):
        result = self.assertMatchesScipy(self.samples(50.0, 3.0), self.samples(49.5, 3.0))
        self.assertGreater(result.pvalue, 0.05)

    def test_welch_degrees_of_freedom(self):
        result = ttest_ind(self.samples(10.0, 1.0), self.samples(0.0, 1.0))
        self.assertAlmostEqual(result.df, 4.0)
        self.assertAlmostEqual(result.statistic, 10.0 / math.sqrt(2 / 3))

    def test_symmetric(self):
        a, b = [1.0, 2.0, 4.0], [0.0, 0.5, 0.7, 0.1]
        forward, backward = ttest_ind(a, b), ttest_ind(b, a)
        self.assertAlmostEqual(forward.statistic, -backward.statistic)
        self.assertAlmostEqual(forward.pvalue, backward.pvalue)

    def test_degenerate(self):
        self.assertRaises(DegenerateSamples, ttest_ind, [1.0], [1.0, 2.0])
        self.assertRaises(DegenerateSamples, ttest_ind, [1.0, 1.0], [2.0, 2.0])
        self.assertRaises(ValueError, ttest_ind, [], [])

    def test_one_constant_sample(self):
        result = ttest_ind([1.0, 1.0, 1.0], [0.0, 0.5, 1.0])
        self.assertGreater(result.statistic, 0)
