import random
import unittest

import numpy

import memocr
from memocr.budget import (
    BudgetSchedule,
    LegibilityModel,
    downsample,
    fit_dimensions,
    fit_to_budget,
    legible_boxes,
    max_pixels,
    patch_grid,
    resize,
    visual_token_count,
)
from memocr.render import MemoryImage, layout, rasterize
from memocr.utils.errors import InvalidBudget


class TestTokenAccounting(unittest.TestCase):

    def test_max_pixels(self):
        self.assertEqual(max_pixels(1), 784)
        self.assertEqual(max_pixels(1024), 802816)
        self.assertEqual(max_pixels(4, patch_side=14), 784)

    def test_invalid_budget(self):
        self.assertRaises(InvalidBudget, max_pixels, 0)
        self.assertRaises(InvalidBudget, max_pixels, -16)
        self.assertRaises(ValueError, fit_dimensions, 100, 100, 0)

    def test_visual_token_count(self):
        self.assertEqual(visual_token_count(28, 28), 1)
        self.assertEqual(visual_token_count(29, 28), 2)
        self.assertEqual(visual_token_count(1, 1), 1)
        self.assertEqual(visual_token_count(768, 48), 56)

    def test_patch_grid(self):
        grid = patch_grid(57, 28)
        self.assertEqual((grid.cols, grid.rows), (3, 1))
        self.assertEqual(grid.token_count, 3)
        self.assertRaises(ValueError, patch_grid, 0, 10)


class TestBudgetSchedule(unittest.TestCase):

    def test_rows(self):
        schedule = BudgetSchedule()
        self.assertEqual(schedule.pixels_per_token, 784)
        self.assertEqual(schedule.rows()[64], 50176)

    def test_budgets_sorted(self):
        schedule = BudgetSchedule(budgets=(256, 16, 16))
        self.assertEqual(schedule.budgets, (16, 256))

    def test_invalid(self):
        self.assertRaises(ValueError, BudgetSchedule, 0)
        self.assertRaises(InvalidBudget, BudgetSchedule, 28, (16, 0))

    def test_to_dict(self):
        data = BudgetSchedule(budgets=(16,)).to_dict()
        self.assertEqual(
            data,
            {"patch_side": 28, "pixels_per_token": 784, "rows": [{"budget": 16, "max_pixels": 12544}]},
        )

    def test_repr(self):
        self.assertEqual(repr(BudgetSchedule()), "BudgetSchedule()")
        self.assertEqual(repr(BudgetSchedule(14)), "BudgetSchedule(patch_side=14)")


class TestFitDimensions(unittest.TestCase):

    def test_within_budget(self):
        self.assertEqual(fit_dimensions(768, 48, 64), (768, 48, 1.0))

    def test_square(self):
        self.assertEqual(fit_dimensions(2800, 2800, 256), (448, 448, 0.16))

    def test_tall_page(self):
        width, height, factor = fit_dimensions(768, 92, 16)
        self.assertEqual((width, height), (448, 28))
        self.assertAlmostEqual(factor, 28 / 92)

    def test_fuzz(self):
        rng = random.Random(42)
        for _ in range(1000):
            width = rng.randint(1, 4000)
            height = rng.randint(1, 4000)
            budget = rng.choice([1, 2, 3, 16, 50, 64, 256, 1000, 1024])
            w, h, factor = fit_dimensions(width, height, budget)
            case = (width, height, budget)
            self.assertLessEqual(visual_token_count(w, h), budget, case)
            self.assertGreaterEqual(w, 1, case)
            self.assertGreaterEqual(h, 1, case)
            self.assertLessEqual(w, width, case)
            self.assertLessEqual(h, height, case)
            self.assertGreater(factor, 0.0, case)
            self.assertLessEqual(factor, 1.0, case)

    def test_monotonic_in_budget(self):
        sizes = [fit_dimensions(768, 1500, b)[:2] for b in (16, 64, 256, 1024)]
        areas = [w * h for w, h in sizes]
        self.assertEqual(areas, sorted(areas))


class TestResize(unittest.TestCase):

    def test_same_size(self):
        image = MemoryImage.blank(10, 10)
        self.assertIs(resize(image, 10, 10), image)

    def test_uniform(self):
        image = MemoryImage(numpy.full((30, 40), 77, dtype=numpy.uint8))
        out = resize(image, 13, 7)
        self.assertEqual(out.size, (13, 7))
        self.assertTrue((out.pixels == 77).all())

    def test_area_average(self):
        pixels = numpy.array([[0, 255], [255, 0]], dtype=numpy.uint8)
        out = resize(MemoryImage(pixels), 1, 1)
        self.assertEqual(int(out.pixels[0, 0]), 128)

    def test_exact_halving(self):
        pixels = numpy.array([[0, 0, 255, 255], [0, 0, 255, 255]], dtype=numpy.uint8)
        out = resize(MemoryImage(pixels), 2, 1)
        self.assertEqual(out.pixels.tolist(), [[0, 255]])

    def test_invalid(self):
        self.assertRaises(ValueError, resize, MemoryImage.blank(4, 4), 0, 2)

    def test_downsample(self):
        image = MemoryImage.blank(100, 60)
        self.assertEqual(downsample(image, 4).size, (25, 15))
        self.assertEqual(downsample(image, 1000).size, (1, 1))
        self.assertRaises(ValueError, downsample, image, 0.5)


class TestFitToBudget(unittest.TestCase):

    def setUp(self):
        text = "# Gene MacLellan\n\n" + " ".join(["body"] * 400)
        self.image = rasterize(layout(memocr.parse(text)))

    def test_budgets(self):
        for budget in (1, 16, 64, 256, 1024):
            result = fit_to_budget(self.image, budget)
            self.assertLessEqual(visual_token_count(*result.image.size), budget)
            self.assertLessEqual(result.scale_factor, 1.0)

    def test_unchanged(self):
        result = fit_to_budget(self.image, 100000)
        self.assertIs(result.image, self.image)
        self.assertEqual(result.scale_factor, 1.0)

    def test_deterministic(self):
        first = fit_to_budget(self.image, 64).image
        second = fit_to_budget(self.image, 64).image
        self.assertEqual(first.to_png(), second.to_png())


class TestLegibility(unittest.TestCase):

    def setUp(self):
        self.page = layout(memocr.parse("# Gene MacLellan\n\nbody text"))

    def test_threshold(self):
        self.assertEqual(len(legible_boxes(self.page, 1.0)), 2)
        self.assertEqual([b.text for b in legible_boxes(self.page, 0.25)], ["Gene MacLellan"])
        self.assertEqual(legible_boxes(self.page, 0.1), [])

    def test_custom_model(self):
        model = LegibilityModel(2.0)
        self.assertEqual(len(legible_boxes(self.page, 0.25, model)), 2)
        self.assertEqual(len(legible_boxes(self.page, 0.01, LegibilityModel(0.0))), 2)

    def test_monotonic(self):
        counts = [len(legible_boxes(self.page, s)) for s in (0.05, 0.2, 0.4, 1.0)]
        self.assertEqual(counts, sorted(counts))

    def test_invalid(self):
        self.assertRaises(ValueError, legible_boxes, self.page, 0.0)
        self.assertRaises(ValueError, legible_boxes, self.page, 1.5)
        self.assertRaises(ValueError, LegibilityModel, -1.0)

    def test_repr(self):
        self.assertEqual(repr(LegibilityModel()), "LegibilityModel()")
        self.assertEqual(repr(LegibilityModel(4.0)), "LegibilityModel(min_glyph_height=4.0)")
