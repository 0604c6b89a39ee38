"""Arithmetic of the budget-aware training objectives.

A drafted memory is scored under several reading scenarios, each with its
own memory budget and question. Rewards of a group of rollouts are turned
into group-relative advantages per scenario, which are then aggregated
into a single advantage per rollout with a weighted mean.

Nothing here updates a model: these are the pure functions producing the
training signal, which can be checked against direct arithmetic.
"""

import io
import json
import typing
import warnings
from typing import (
    Any,
    BinaryIO,
    Callable,
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Union,
)

import numpy

from .eval.instance import EvalInstance
from .eval.metrics import sem_match
from .lifecycle.clients.base import ReaderClient
from .lifecycle.memory import MemoryState, read_rendered
from .lifecycle.stream import default_tokenizer
from .render.pipeline import Renderer
from .render.style import StyleSheet
from .utils.errors import GroupTooSmall, ZeroWeightSum
from .utils.meta import roundrepr, typechecked
from .utils.warnings import ConfigWarning

__all__ = [
    "TaskSpec",
    "RolloutGroup",
    "AdvantageSet",
    "TrainingConfig",
    "group_advantage",
    "aggregate_advantage",
    "build_task_suite",
    "scenario_reward",
    "score_group",
]

ORIGINAL = "original"
DETAIL_ORIENTED = "detail_oriented"

#: The budget of the standard task, in visual tokens.
STANDARD_BUDGET = 512
#: The ratio of pixels kept by the memory-compression task.
COMPRESSION_RATIO = 16

VARIANTS = ("full", "no_augM", "no_aug")


@roundrepr
class TaskSpec(object):
    """A reading scenario a drafted memory is rewarded under.

    Attributes:
        id (str): The identifier of the task.
        memory_budget (int): The budget the memory is read at, in visual
            tokens.
        question_source (str): ``original`` to ask the question of the
            instance, ``detail_oriented`` to ask its detail question.
        weight (float): The weight of the task in the aggregated advantage.

    """

    id: str
    memory_budget: int
    question_source: str
    weight: float

    __slots__ = ("id", "memory_budget", "question_source", "weight")

    @typechecked()
    def __init__(self, id: str, memory_budget: int, question_source: str, weight: float):
        if memory_budget < 1:
            raise ValueError("`memory_budget` must be strictly positive")
        if question_source not in (ORIGINAL, DETAIL_ORIENTED):
            raise ValueError(f"invalid question source: {question_source!r}")
        if weight < 0:
            raise ValueError("`weight` cannot be negative")
        self.id = id
        self.memory_budget = memory_budget
        self.question_source = question_source
        self.weight = weight

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TaskSpec):
            return (self.id, self.memory_budget, self.question_source, self.weight) == (
                other.id,
                other.memory_budget,
                other.question_source,
                other.weight,
            )
        return False

    def __hash__(self) -> int:
        return hash((TaskSpec, self.id, self.memory_budget))

    def question(self, instance: EvalInstance) -> str:
        if self.question_source == DETAIL_ORIENTED:
            if instance.detail_question is None:
                raise ValueError(f"instance {instance.id!r} has no detail question")
            return instance.detail_question
        return instance.question

    def golds(self, instance: EvalInstance) -> List[str]:
        if self.question_source == DETAIL_ORIENTED:
            return list(instance.detail_answers)
        return list(instance.gold_answers)


def build_task_suite(
    instance: Optional[EvalInstance] = None,
    variant: str = "full",
    budget: int = STANDARD_BUDGET,
) -> List[TaskSpec]:
    """Build the reading scenarios a memory of ``instance`` is scored under.

    The standard task reads the memory at ``budget`` tokens. The
    memory-compression task reads it downsampled 4 times per dimension, so
    at a sixteenth of the budget. The question-variation task asks a
    detail-oriented question at the standard budget, and is omitted when
    the instance has none.

    Arguments:
        instance (EvalInstance, optional): The instance to build the tasks
            of. When `None`, every task is built.
        variant (str): ``full`` for every task, ``no_augM`` to drop the
            memory-compression task, ``no_aug`` to only keep the standard
            task.
        budget (int): The budget of the standard task.

    Example:
        >>> for task in memocr.build_task_suite():
        ...     print(task)
        TaskSpec('std', 512, 'original', 1.0)
        TaskSpec('augM', 32, 'original', 0.7)
        TaskSpec('augQ', 512, 'detail_oriented', 0.3)

    """
    if variant not in VARIANTS:
        raise ValueError(f"invalid variant: {variant!r}")
    tasks = [TaskSpec("std", budget, ORIGINAL, 1.0)]
    if variant == "full":
        tasks.append(TaskSpec("augM", max(1, budget // COMPRESSION_RATIO), ORIGINAL, 0.7))
    has_detail = instance is None or instance.detail_question is not None
    if variant in ("full", "no_augM") and has_detail:
        tasks.append(TaskSpec("augQ", budget, DETAIL_ORIENTED, 0.3))
    return tasks


def group_advantage(rewards: Sequence[float], mode: str = "std") -> List[float]:
    """Compute the group-relative advantages of a group of rewards.

    Arguments:
        rewards (sequence of float): The rewards of every rollout of the
            group.
        mode (str): ``std`` to normalize the centered rewards by the
            population standard deviation of the group, ``mean`` to only
            subtract the group mean.

    Raises:
        GroupTooSmall: When the group has fewer than two rewards.

    Example:
        >>> memocr.group_advantage([1, 1, 0, 0])
        [1.0, 1.0, -1.0, -1.0]
        >>> memocr.group_advantage([0.5, 0.5, 0.5])
        [0.0, 0.0, 0.0]

    """
    if mode not in ("std", "mean"):
        raise ValueError(f"invalid advantage mode: {mode!r}")
    if len(rewards) < 2:
        raise GroupTooSmall(f"a group needs at least 2 rewards, got {len(rewards)}")

    values = numpy.asarray(rewards, dtype=numpy.float64)
    if numpy.all(values == values[0]):
        return [0.0] * len(values)
    centered = values - values.mean()
    if mode == "mean":
        return centered.tolist()
    return (centered / values.std()).tolist()


def aggregate_advantage(
    per_task: Mapping[str, Sequence[float]], weights: Mapping[str, float]
) -> List[float]:
    """Aggregate per-task advantages with a weighted mean.

    Weights of tasks without advantages are ignored. A `ConfigWarning` is
    issued when some, but not all, of the tasks have a zero weight.

    Raises:
        ZeroWeightSum: When the weights of the tasks sum to zero.
        ValueError: When tasks have groups of different sizes, or when a
            task has no weight.

    Example:
        >>> per_task = {"std": [0.5], "augM": [-1.0], "augQ": [0.2]}
        >>> weights = {"std": 1.0, "augM": 0.7, "augQ": 0.3}
        >>> round(memocr.aggregate_advantage(per_task, weights)[0], 12)
        -0.07

    """
    if not per_task:
        raise ValueError("cannot aggregate advantages without any task")
    missing = set(per_task).difference(weights)
    if missing:
        raise ValueError(f"no weight for tasks: {sorted(missing)!r}")
    sizes = {len(advantages) for advantages in per_task.values()}
    if len(sizes) != 1:
        raise ValueError("every task must have the same group size")

    total = sum(weights[task] for task in per_task)
    if total == 0:
        raise ZeroWeightSum("task weights sum to zero")
    ignored = sorted(task for task in per_task if weights[task] == 0)
    if ignored:
        warnings.warn(
            f"tasks {ignored!r} have a zero weight and do not contribute",
            ConfigWarning,
            stacklevel=2,
        )
    weighted = sum(
        weights[task] * numpy.asarray(advantages, dtype=numpy.float64)
        for task, advantages in per_task.items()
    )
    return (weighted / total).tolist()  # type: ignore


def scenario_reward(prediction: str, golds: Iterable[str]) -> float:
    """Get the reward of a prediction, ``1.0`` when it matches a gold answer.

    Example:
        >>> memocr.scenario_reward("so \\\\boxed{Gene MacLellan}", ["Gene MacLellan"])
        1.0
        >>> memocr.scenario_reward("", ["Gene MacLellan"])
        0.0

    """
    return 1.0 if sem_match(prediction, golds) else 0.0


class RolloutGroup(object):
    """The rewards of a group of rollouts under every task.

    Attributes:
        rewards (dict): A mapping of task identifiers to the rewards of
            every rollout of the group, in rollout order.

    """

    __slots__ = ("rewards",)

    def __init__(self, rewards: Mapping[str, Sequence[float]]):
        self.rewards: Dict[str, List[float]] = {
            task: [float(r) for r in values] for task, values in rewards.items()
        }
        if not self.rewards:
            raise ValueError("a rollout group needs at least one task")
        if len({len(values) for values in self.rewards.values()}) != 1:
            raise ValueError("every task must have one reward per rollout")
        for task, values in self.rewards.items():
            if any(not 0.0 <= r <= 1.0 for r in values):
                raise ValueError(f"rewards of task {task!r} must be in [0, 1]")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rewards!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RolloutGroup):
            return self.rewards == other.rewards
        return False

    @property
    def group_size(self) -> int:
        """`int`: The number of rollouts of the group."""
        return len(next(iter(self.rewards.values())))


class AdvantageSet(object):
    """The per-task and aggregated advantages of a group of rollouts.

    Attributes:
        per_task (dict): The group-relative advantages of every task.
        aggregated (list of float): The weighted mean of the per-task
            advantages of every rollout.
        weights (dict): The weights of the tasks used for aggregation.

    """

    __slots__ = ("per_task", "aggregated", "weights")

    @classmethod
    def from_rewards(
        cls,
        group: RolloutGroup,
        tasks: Union[Sequence[TaskSpec], Mapping[str, float]],
        mode: str = "std",
    ) -> "AdvantageSet":
        """Compute the advantages of a group with the weights of ``tasks``."""
        if isinstance(tasks, Mapping):
            weights = dict(tasks)
        else:
            weights = {task.id: task.weight for task in tasks}
        per_task = {
            task: group_advantage(rewards, mode) for task, rewards in group.rewards.items()
        }
        return cls(per_task, aggregate_advantage(per_task, weights), weights)

    @classmethod
    def load(cls, file: BinaryIO) -> "AdvantageSet":
        data = json.load(file)
        return cls(data["per_task"], data["aggregated"], data["weights"])

    def __init__(
        self,
        per_task: Mapping[str, Sequence[float]],
        aggregated: Sequence[float],
        weights: Mapping[str, float],
    ):
        self.per_task = {task: list(values) for task, values in per_task.items()}
        self.aggregated = list(aggregated)
        self.weights = dict(weights)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.per_task!r}, {self.aggregated!r}, {self.weights!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AdvantageSet):
            return self.to_dict() == other.to_dict()
        return False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "per_task": self.per_task,
            "aggregated": self.aggregated,
            "weights": self.weights,
        }

    def dump(self, file: BinaryIO) -> None:
        file.write(json.dumps(self.to_dict(), indent=2, sort_keys=True).encode("utf-8"))

    def dumps(self) -> str:
        s = io.BytesIO()
        self.dump(s)
        return s.getvalue().decode("utf-8")


def score_group(
    memories: Sequence[Union[str, MemoryState]],
    instance: EvalInstance,
    tasks: Sequence[TaskSpec],
    reader_factory: Callable[[Sequence[str]], ReaderClient],
    style: Optional[StyleSheet] = None,
    config: Optional["TrainingConfig"] = None,
) -> RolloutGroup:
    """Score a group of drafted memories under every task.

    Every memory is rendered once, then fitted to the budget of each task
    and read with the question of the task by a reader created from the
    gold answers of that question.

    When a ``config`` is given, a `ConfigWarning` is issued if the group
    does not have ``config.group_size`` memories, or if a memory is longer
    than ``config.max_memory_tokens``.

    Raises:
        ClientError: When a reader failed.

    """
    texts = [m.rich_text if isinstance(m, MemoryState) else m for m in memories]
    if config is not None:
        _check_group(texts, memories, config)

    renderer = Renderer(style)
    renderings = [renderer.render(text) for text in texts]
    rewards: Dict[str, List[float]] = {}
    for task in tasks:
        question, golds = task.question(instance), task.golds(instance)
        reader = reader_factory(golds)
        rewards[task.id] = [
            scenario_reward(read_rendered(r.fit(task.memory_budget), question, reader), golds)
            for r in renderings
        ]
    return RolloutGroup(rewards)


def _check_group(
    texts: Sequence[str],
    memories: Sequence[Union[str, MemoryState]],
    config: "TrainingConfig",
) -> None:
    if len(texts) != config.group_size:
        warnings.warn(
            f"scoring a group of {len(texts)} memories, expected {config.group_size}",
            ConfigWarning,
            stacklevel=3,
        )
    tokenizer = default_tokenizer()
    for index, (text, memory) in enumerate(zip(texts, memories)):
        count = memory.token_count if isinstance(memory, MemoryState) else tokenizer.count(text)
        if count > config.max_memory_tokens:
            warnings.warn(
                f"memory {index} has {count} tokens, over the cap of {config.max_memory_tokens}",
                ConfigWarning,
                stacklevel=3,
            )


class TrainingConfig(object):
    """The rollout and optimization settings of budget-aware training.

    The group size and the memory cap are checked by `score_group`. The
    other settings are validated and kept for reference alongside the
    results they produced.
    """

    __slots__ = (
        "chunk_size",
        "group_size",
        "kl_coefficient",
        "clip_ratio",
        "top_p",
        "temperature",
        "max_memory_tokens",
        "max_answer_tokens",
        "global_batch_size",
        "micro_batch_size",
        "learning_rate",
        "warmup_steps",
    )

    @typechecked()
    def __init__(
        self,
        chunk_size: int = 5000,
        group_size: int = 16,
        kl_coefficient: float = 1e-3,
        clip_ratio: float = 0.2,
        top_p: float = 0.999,
        temperature: float = 1.0,
        max_memory_tokens: int = 2048,
        max_answer_tokens: int = 2048,
        global_batch_size: int = 64,
        micro_batch_size: int = 16,
        learning_rate: float = 1e-6,
        warmup_steps: int = 20,
    ):
        if chunk_size < 1:
            raise ValueError("`chunk_size` must be strictly positive")
        if group_size < 2:
            raise GroupTooSmall("`group_size` must be at least 2")
        if kl_coefficient < 0:
            raise ValueError("`kl_coefficient` cannot be negative")
        if not 0 < clip_ratio < 1:
            raise ValueError("`clip_ratio` must be in (0, 1)")
        if not 0 < top_p <= 1:
            raise ValueError("`top_p` must be in (0, 1]")
        if temperature <= 0:
            raise ValueError("`temperature` must be strictly positive")
        if max_memory_tokens < 1 or max_answer_tokens < 1:
            raise ValueError("token limits must be strictly positive")
        if micro_batch_size < 1 or global_batch_size % micro_batch_size:
            raise ValueError("`global_batch_size` must be a multiple of `micro_batch_size`")
        if learning_rate <= 0:
            raise ValueError("`learning_rate` must be strictly positive")
        if warmup_steps < 0:
            raise ValueError("`warmup_steps` cannot be negative")

        self.chunk_size = chunk_size
        self.group_size = group_size
        self.kl_coefficient = kl_coefficient
        self.clip_ratio = clip_ratio
        self.top_p = top_p
        self.temperature = temperature
        self.max_memory_tokens = max_memory_tokens
        self.max_answer_tokens = max_answer_tokens
        self.global_batch_size = global_batch_size
        self.micro_batch_size = micro_batch_size
        self.learning_rate = learning_rate
        self.warmup_steps = warmup_steps

    def __repr__(self) -> str:
        defaults = type(self)()
        return roundrepr.make(
            type(self).__name__,
            **{name: (getattr(self, name), getattr(defaults, name)) for name in self.__slots__},
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TrainingConfig):
            return self.to_dict() == other.to_dict()
        return False

    def to_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in self.__slots__}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "TrainingConfig":
        unknown = set(data).difference(cls.__slots__)
        if unknown:
            raise ValueError(f"unknown training settings: {sorted(unknown)!r}")
        return cls(**data)
