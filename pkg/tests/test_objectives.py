import io
import json
import os
import unittest
import warnings

import memocr
from memocr.eval.instance import EvalInstance
from memocr.objectives import (
    AdvantageSet,
    RolloutGroup,
    TaskSpec,
    TrainingConfig,
    aggregate_advantage,
    build_task_suite,
    group_advantage,
    scenario_reward,
    score_group,
)
from memocr.utils.errors import GroupTooSmall, ZeroWeightSum
from memocr.utils.warnings import ConfigWarning

from .utils import DATADIR


class TestGroupAdvantage(unittest.TestCase):

    def test_std(self):
        self.assertEqual(group_advantage([1.0, 0.0]), [1.0, -1.0])
        advantages = group_advantage([1.0, 0.0, 0.0, 0.0])
        self.assertAlmostEqual(advantages[0], 3 ** 0.5)
        self.assertAlmostEqual(sum(advantages), 0.0)

    def test_mean(self):
        self.assertEqual(group_advantage([1.0, 0.0, 0.5], mode="mean"), [0.5, -0.5, 0.0])

    def test_constant_group(self):
        self.assertEqual(group_advantage([1.0, 1.0]), [0.0, 0.0])
        self.assertEqual(group_advantage([0.0, 0.0, 0.0], mode="mean"), [0.0, 0.0, 0.0])

    def test_group_too_small(self):
        self.assertRaises(GroupTooSmall, group_advantage, [1.0])
        self.assertRaises(GroupTooSmall, group_advantage, [])

    def test_invalid_mode(self):
        self.assertRaises(ValueError, group_advantage, [1.0, 0.0], mode="max")


class TestAggregateAdvantage(unittest.TestCase):

    def test_weighted_mean(self):
        per_task = {"std": [1.0, -1.0], "augM": [-1.0, 1.0], "augQ": [0.0, 0.0]}
        weights = {"std": 1.0, "augM": 0.7, "augQ": 0.3}
        aggregated = aggregate_advantage(per_task, weights)
        self.assertAlmostEqual(aggregated[0], 0.15)
        self.assertAlmostEqual(aggregated[1], -0.15)

    def test_extra_weights_ignored(self):
        aggregated = aggregate_advantage({"std": [1.0, -1.0]}, {"std": 1.0, "augM": 0.7})
        self.assertEqual(aggregated, [1.0, -1.0])

    def test_zero_weights(self):
        with self.assertRaises(ZeroWeightSum):
            aggregate_advantage({"std": [1.0, -1.0]}, {"std": 0.0})

    def test_partial_zero_weights(self):
        per_task = {"std": [1.0, -1.0], "augM": [-1.0, 1.0]}
        with self.assertWarns(ConfigWarning):
            aggregated = aggregate_advantage(per_task, {"std": 1.0, "augM": 0.0})
        self.assertEqual(aggregated, [1.0, -1.0])

    def test_invalid(self):
        self.assertRaises(ValueError, aggregate_advantage, {}, {})
        self.assertRaises(ValueError, aggregate_advantage, {"std": [1.0]}, {})
        self.assertRaises(
            ValueError,
            aggregate_advantage,
            {"std": [1.0, 0.0], "augM": [1.0]},
            {"std": 1.0, "augM": 1.0},
        )


class TestTaskSuite(unittest.TestCase):

    def setUp(self):
        self.instance = memocr.make_suite(1)[0]

    def test_full(self):
        tasks = build_task_suite(self.instance)
        self.assertEqual([t.id for t in tasks], ["std", "augM", "augQ"])
        self.assertEqual([t.memory_budget for t in tasks], [512, 32, 512])
        self.assertEqual([t.weight for t in tasks], [1.0, 0.7, 0.3])

    def test_variants(self):
        tasks = build_task_suite(self.instance, variant="no_augM")
        self.assertEqual([t.id for t in tasks], ["std", "augQ"])
        tasks = build_task_suite(self.instance, variant="no_aug")
        self.assertEqual([t.id for t in tasks], ["std"])
        self.assertRaises(ValueError, build_task_suite, self.instance, "partial")

    def test_no_detail_question(self):
        instance = EvalInstance("x", "Who?", ["a"], context="a b c")
        self.assertEqual([t.id for t in build_task_suite(instance)], ["std", "augM"])

    def test_budget(self):
        tasks = build_task_suite(budget=16)
        self.assertEqual(tasks[1].memory_budget, 1)

    def test_questions(self):
        std, _, aug_q = build_task_suite(self.instance)
        self.assertEqual(std.question(self.instance), self.instance.question)
        self.assertEqual(aug_q.question(self.instance), self.instance.detail_question)
        self.assertEqual(aug_q.golds(self.instance), self.instance.detail_answers)

    def test_task_spec_invalid(self):
        self.assertRaises(ValueError, TaskSpec, "x", 0, "original", 1.0)
        self.assertRaises(ValueError, TaskSpec, "x", 16, "nowhere", 1.0)
        self.assertRaises(ValueError, TaskSpec, "x", 16, "original", -1.0)

    def test_repr(self):
        self.assertEqual(
            repr(TaskSpec("std", 512, "original", 1.0)),
            "TaskSpec('std', 512, 'original', 1.0)",
        )


class TestAdvantageSet(unittest.TestCase):

    def setUp(self):
        with open(os.path.join(DATADIR, "rewards.json")) as f:
            self.group = RolloutGroup(json.load(f))

    def test_group(self):
        self.assertEqual(self.group.group_size, 2)
        self.assertRaises(ValueError, RolloutGroup, {})
        self.assertRaises(ValueError, RolloutGroup, {"std": [1.0], "augM": [1.0, 0.0]})
        self.assertRaises(ValueError, RolloutGroup, {"std": [1.5, 0.0]})

    def test_from_rewards(self):
        advantages = AdvantageSet.from_rewards(self.group, build_task_suite())
        self.assertEqual(advantages.per_task["std"], [1.0, -1.0])
        self.assertEqual(advantages.per_task["augM"], [-1.0, 1.0])
        self.assertEqual(advantages.per_task["augQ"], [0.0, 0.0])
        self.assertAlmostEqual(advantages.aggregated[0], 0.15)
        self.assertAlmostEqual(advantages.aggregated[1], -0.15)

    def test_mean_mode(self):
        advantages = AdvantageSet.from_rewards(self.group, build_task_suite(), mode="mean")
        self.assertEqual(advantages.per_task["std"], [0.5, -0.5])
        self.assertAlmostEqual(advantages.aggregated[0], 0.075)

    def test_dump_load(self):
        advantages = AdvantageSet.from_rewards(self.group, {"std": 1.0, "augM": 1.0, "augQ": 1.0})
        loaded = AdvantageSet.load(io.BytesIO(advantages.dumps().encode("utf-8")))
        self.assertEqual(loaded, advantages)
        self.assertEqual(loaded.aggregated, [0.0, 0.0])


class TestScoring(unittest.TestCase):

    def setUp(self):
        self.instance = EvalInstance(
            "snowbird",
            "Who wrote the song Snowbird?",
            ["Gene MacLellan"],
            context="Gene MacLellan wrote the song Snowbird.",
            detail_question="Where was Snowbird recorded?",
            detail_answers=["Toronto"],
        )
        body = "\n\n".join(f"Anne Murray sang verse {i} of the song." for i in range(20))
        self.salient = "# Gene MacLellan wrote the song Snowbird.\n\n" + body
        self.buried = body + "\n\nGene MacLellan wrote the song Snowbird."

    def test_scenario_reward(self):
        self.assertEqual(scenario_reward("\\boxed{Gene MacLellan}", ["Gene MacLellan"]), 1.0)
        self.assertEqual(scenario_reward("\\boxed{UNKNOWN}", ["Gene MacLellan"]), 0.0)

    def test_compression_task_rewards_salient_layout(self):
        tasks = build_task_suite(self.instance)
        group = score_group([self.salient, self.buried], self.instance, tasks, memocr.MockReader)
        self.assertEqual(group.rewards["std"], [1.0, 1.0])
        self.assertEqual(group.rewards["augM"], [1.0, 0.0])
        self.assertEqual(group.rewards["augQ"], [0.0, 0.0])
        advantages = AdvantageSet.from_rewards(group, tasks)
        self.assertGreater(advantages.aggregated[0], advantages.aggregated[1])

    def test_without_compression_task(self):
        tasks = build_task_suite(self.instance, variant="no_aug")
        group = score_group([self.salient, self.buried], self.instance, tasks, memocr.MockReader)
        advantages = AdvantageSet.from_rewards(group, tasks)
        self.assertEqual(advantages.aggregated, [0.0, 0.0])


    def test_config_group_size(self):
        tasks = build_task_suite(self.instance, variant="no_aug")
        memories = [self.salient, self.buried]
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            config = TrainingConfig(group_size=2)
            score_group(memories, self.instance, tasks, memocr.MockReader, config=config)
        with self.assertWarns(ConfigWarning):
            config = TrainingConfig(group_size=4)
            score_group(memories, self.instance, tasks, memocr.MockReader, config=config)

    def test_config_memory_cap(self):
        tasks = build_task_suite(self.instance, variant="no_aug")
        config = TrainingConfig(group_size=2, max_memory_tokens=10)
        with self.assertWarns(ConfigWarning) as ctx:
            memories = [self.salient, "Gene"]
            group = score_group(memories, self.instance, tasks, memocr.MockReader, config=config)
        self.assertIn("memory 0", str(ctx.warning))
        self.assertEqual(group.group_size, 2)


class TestTrainingConfig(unittest.TestCase):

    def test_defaults(self):
        config = TrainingConfig()
        self.assertEqual(config.group_size, 16)
        self.assertEqual(config.chunk_size, 5000)
        self.assertEqual(repr(config), "TrainingConfig()")

    def test_repr(self):
        self.assertEqual(repr(TrainingConfig(group_size=8)), "TrainingConfig(group_size=8)")

    def test_invalid(self):
        self.assertRaises(GroupTooSmall, TrainingConfig, group_size=1)
        self.assertRaises(ValueError, TrainingConfig, clip_ratio=1.5)
        self.assertRaises(ValueError, TrainingConfig, global_batch_size=60, micro_batch_size=16)

    @unittest.skipUnless(__debug__, "no type checks in optimized mode")
    def test_types(self):
        self.assertRaises(TypeError, TrainingConfig, group_size=16.0)

    def test_dict(self):
        config = TrainingConfig(learning_rate=2e-6)
        self.assertEqual(TrainingConfig.from_dict(config.to_dict()), config)
        self.assertRaises(ValueError, TrainingConfig.from_dict, {"epochs": 3})
