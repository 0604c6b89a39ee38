"""Budget sweeps over a suite of evaluation instances.

Drafting does not depend on the budget, so the memory of every instance
is drafted once, rendered once, and only fitted again for every budget of
the sweep.
"""

import logging
import os
import re
import typing
from multiprocessing.pool import ThreadPool
from typing import Callable, Iterable, List, Optional, Sequence, Union

from ..budget import DEFAULT_BUDGETS, BudgetSchedule, LegibilityModel, max_pixels
from ..lifecycle.clients.base import DrafterClient, ReaderClient
from ..lifecycle.clients.mock import MockDrafter, MockReader
from ..lifecycle.ledger import CostLedger
from ..lifecycle.memory import (
    MAX_MEMORY_TOKENS,
    MemoryState,
    answer_text,
    read_rendered,
    run_lifecycle,
)
from ..lifecycle.stream import Tokenizer, default_tokenizer
from ..render.pipeline import Renderer
from ..render.style import StyleSheet
from ..salience import PriorityClass, PriorityConfig
from ..utils.errors import MemocrError
from .instance import EvalInstance
from .metrics import sem_match
from .precision import inject_evidence
from .report import EvalRecord, EvalReport

__all__ = ["PipelineConfig", "budget_sweep"]

logger = logging.getLogger(__name__)

DrafterFactory = Callable[[EvalInstance], DrafterClient]
ReaderFactory = Callable[[Sequence[str]], ReaderClient]


class PipelineConfig(object):
    """The clients and settings of an evaluation pipeline.

    Attributes:
        drafter_factory (callable): A function creating the drafter of an
            instance. Defaults to a `MockDrafter` promoting the evidence of
            the instance to headings.
        reader_factory (callable): A function creating a reader from the
            gold answers of a question. Defaults to a `MockReader`.
        chunk_size (int): The number of tokens per chunk of raw contexts.
        max_memory_tokens (int): The maximum number of memory tokens.
        style (StyleSheet): The style memories are rendered with.
        priority (PriorityConfig): The salience rule of the renderer.
        legibility (LegibilityModel): The legibility model of mock readers.
        tokenizer (Tokenizer): The tokenizer counting text tokens.
        seed (int): The seed of the run, recorded in the report.
        threads (int or None): The number of instances evaluated
            concurrently. `None` uses one thread per CPU.

    """

    __slots__ = (
        "drafter_factory",
        "reader_factory",
        "chunk_size",
        "max_memory_tokens",
        "style",
        "priority",
        "legibility",
        "tokenizer",
        "seed",
        "threads",
    )

    @classmethod
    def mock(cls, promote_evidence: bool = True, **kwargs: typing.Any) -> "PipelineConfig":
        """Create a pipeline using deterministic mock clients.

        Arguments:
            promote_evidence (bool): Whether the mock drafter promotes the
                evidence of each instance to headings. Disable it to get
                memories keeping every relevant sentence as body text.

        """
        config = cls(**kwargs)
        config.drafter_factory, config.reader_factory = _mock_factories(config, promote_evidence)
        return config

    def __init__(
        self,
        drafter_factory: Optional[DrafterFactory] = None,
        reader_factory: Optional[ReaderFactory] = None,
        chunk_size: int = 5000,
        max_memory_tokens: int = MAX_MEMORY_TOKENS,
        style: Optional[StyleSheet] = None,
        priority: Optional[PriorityConfig] = None,
        legibility: Optional[LegibilityModel] = None,
        tokenizer: Optional[Tokenizer] = None,
        seed: int = 0,
        threads: Optional[int] = None,
    ):
        if chunk_size < 1:
            raise ValueError("`chunk_size` must be strictly positive")
        if threads is not None and not threads > 0:
            raise ValueError("`threads` must be None or strictly positive")
        self.chunk_size = chunk_size
        self.max_memory_tokens = max_memory_tokens
        self.style = style if style is not None else StyleSheet.default()
        self.priority = priority if priority is not None else PriorityConfig.default()
        self.legibility = legibility if legibility is not None else LegibilityModel()
        self.tokenizer = tokenizer if tokenizer is not None else default_tokenizer()
        self.seed = seed
        self.threads = threads
        mock_drafter_factory, mock_reader_factory = _mock_factories(self, True)
        self.drafter_factory = drafter_factory or mock_drafter_factory
        self.reader_factory = reader_factory or mock_reader_factory

    def __repr__(self) -> str:
        return f"<PipelineConfig chunk_size={self.chunk_size} seed={self.seed}>"

    def renderer(self) -> Renderer:
        return Renderer(self.style, self.priority)


def _mock_factories(
    config: PipelineConfig, promote_evidence: bool
) -> typing.Tuple[DrafterFactory, ReaderFactory]:
    max_tokens = config.max_memory_tokens
    tokenizer = config.tokenizer
    legibility = config.legibility

    def drafter_factory(instance: EvalInstance) -> DrafterClient:
        evidence = instance.evidence if promote_evidence else ()
        return MockDrafter(evidence, max_tokens=max_tokens, tokenizer=tokenizer)

    def reader_factory(golds: Sequence[str]) -> ReaderClient:
        return MockReader(golds, legibility)

    return drafter_factory, reader_factory


_UNSAFE_FILENAME = re.compile(r"[^A-Za-z0-9._-]+")


def _file_stem(identifier: str) -> str:
    return _UNSAFE_FILENAME.sub("_", identifier).lstrip(".") or "_"


class _Sweep(object):
    def __init__(
        self,
        budgets: Sequence[int],
        config: PipelineConfig,
        modality: str,
        inject: Optional[PriorityClass],
        image_dir: Optional[str],
    ):
        self.budgets = budgets
        self.config = config
        self.modality = modality
        self.inject = inject
        self.image_dir = image_dir
        self.renderer = config.renderer()

    def draft(self, instance: EvalInstance, ledger: CostLedger) -> MemoryState:
        config = self.config
        stream = instance.stream(config.chunk_size, config.tokenizer)
        result = run_lifecycle(
            stream,
            instance.question,
            config.drafter_factory(instance),
            config.max_memory_tokens,
            config.tokenizer,
        )
        ledger.records.extend(result.ledger)
        state = result.state
        if self.inject is not None:
            for evidence in instance.evidence:
                state = inject_evidence(state, self.inject, evidence, config.tokenizer)
        return state

    def read(
        self, instance: EvalInstance, state: MemoryState, ledger: CostLedger
    ) -> List[EvalRecord]:
        reader = self.config.reader_factory(instance.gold_answers)
        records = []
        rendering = None
        if self.modality == "visual":
            rendering = self.renderer.render(state.rich_text)
        for budget in self.budgets:
            if rendering is not None:
                rendered = rendering.fit(budget)
                predicted = read_rendered(rendered, instance.question, reader, ledger, state.step)
                if self.image_dir is not None:
                    name = f"{_file_stem(instance.id)}-{budget}.png"
                    rendered.image.save(os.path.join(self.image_dir, name))
            else:
                predicted = answer_text(
                    state, instance.question, budget, reader, self.config.tokenizer, ledger
                )
            matched = sem_match(predicted, instance.gold_answers)
            used = ledger.records[-1].context_size
            records.append(
                EvalRecord(instance.id, instance.dataset, budget, predicted, matched, used)
            )
        return records

    def __call__(self, instance: EvalInstance) -> typing.Tuple[List[EvalRecord], CostLedger]:
        ledger = CostLedger()
        try:
            state = self.draft(instance, ledger)
            return self.read(instance, state, ledger), ledger
        except MemocrError as err:
            logger.error("instance %r failed: %s", instance.id, err)
            records = [
                EvalRecord(instance.id, instance.dataset, budget, None, False, 0, str(err))
                for budget in self.budgets
            ]
            return records, ledger


def budget_sweep(
    instances: Iterable[EvalInstance],
    budgets: Iterable[int] = DEFAULT_BUDGETS,
    config: Optional[PipelineConfig] = None,
    modality: str = "visual",
    inject: Union[PriorityClass, str, None] = None,
    image_dir: Optional[str] = None,
) -> EvalReport:
    """Evaluate a suite of instances at several memory budgets.

    Arguments:
        instances (iterable of EvalInstance): The instances to evaluate.
        budgets (iterable of int): The memory budgets to read memories at.
        config (PipelineConfig, optional): The clients and settings of the
            pipeline. Defaults to mock clients.
        modality (str): ``visual`` to read rendered memories fitted to the
            budget, ``text`` to read memories truncated to the budget.
        inject (PriorityClass or str, optional): A region to inject the
            ground-truth evidence of every instance into after drafting,
            to measure how well each region survives compression.
        image_dir (str, optional): A directory to save every budget-fitted
            memory image to, as ``<instance>-<budget>.png``, with every
            character of the identifier that is unsafe in a file name
            replaced by an underscore.

    Raises:
        ValueError: When no instance or no budget is given.
        InvalidBudget: When a budget is not strictly positive.

    Example:
        >>> suite = memocr.make_suite(3)
        >>> report = memocr.budget_sweep(suite, [16, 1024])
        >>> report.accuracy(16), report.accuracy(1024)
        (1.0, 1.0)

    """
    instances = list(instances)
    budgets = sorted(set(budgets))
    if not instances:
        raise ValueError("cannot run a sweep without instances")
    if not budgets:
        raise ValueError("cannot run a sweep without budgets")
    if modality not in ("visual", "text"):
        raise ValueError(f"invalid modality: {modality!r}")
    config = config if config is not None else PipelineConfig()
    region = PriorityClass(inject) if inject is not None else None
    if image_dir is not None:
        os.makedirs(image_dir, exist_ok=True)

    for budget in budgets:
        max_pixels(budget)

    sweep = _Sweep(budgets, config, modality, region, image_dir)
    if config.threads == 1:
        outcomes = [sweep(instance) for instance in instances]
    else:
        with ThreadPool(config.threads) as pool:
            outcomes = pool.map(sweep, instances)

    records = [record for recs, _ in outcomes for record in recs]
    ledgers = {instance.id: ledger for instance, (_, ledger) in zip(instances, outcomes)}
    schedule = BudgetSchedule(budgets=tuple(budgets)) if modality == "visual" else None
    report = EvalReport(records, budgets, config.seed, modality, ledgers, schedule=schedule)
    failed = len(report.failures())
    if failed:
        logger.warning("%i of %i instances failed", failed, len(instances))
    logger.info(
        "swept %i instances at budgets %s", len(instances), ", ".join(map(str, budgets))
    )
    return report
