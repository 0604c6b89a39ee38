"""Visual memories for long-context agents.

**memocr** keeps the memory of an agent reading a long context as a
Markdown document, and hands it to a reader as an image fitted to a budget
of visual tokens. Headings and bold text are rendered large, so that the
crucial part of a memory stays legible when the image is downsampled,
while body text is rendered small and degrades first.

The library covers the whole lifecycle: chunked drafting of the memory
with pluggable drafter clients, deterministic rendering with an embedded
bitmap font, budget fitting on the patch grid of vision encoders, reading
with pluggable reader clients, and the evaluation protocol used to measure
memory agents under several budgets.

Caution:
    Only classes and modules reachable from the top-level package
    ``memocr`` are considered public and are guaranteed stable over
    `Semantic Versioning <https://semver.org/>`_. Use submodules (other
    than `~memocr.errors` and `~memocr.warnings`) at your own risk!

Note:
    Constructors of the configuration classes check the types of their
    arguments, to avoid common errors. This can be disabled by executing
    Python in optimized mode (with the ``-O`` flag). *Rendering
    performances are not affected.*

"""

from .salience import (
    Block,
    InlineSpan,
    PriorityClass,
    PriorityConfig,
    SalienceTree,
    normalize_source,
    parse,
    priority_class,
)
from .render import (
    LayoutBox,
    MemoryImage,
    PageLayout,
    RenderedMemory,
    Renderer,
    Rendering,
    StyleSheet,
    benchmark,
    layout,
    rasterize,
)
from .budget import (
    BudgetSchedule,
    LegibilityModel,
    downsample,
    fit_dimensions,
    fit_to_budget,
    legible_boxes,
    max_pixels,
    visual_token_count,
)
from .lifecycle import (
    Chunk,
    ContextStream,
    CostLedger,
    DrafterClient,
    HttpClientConfig,
    HttpDrafter,
    HttpReader,
    MemoryState,
    MockDrafter,
    MockReader,
    ReaderClient,
    Tokenizer,
    WhitespaceTokenizer,
    answer,
    answer_text,
    build_draft_prompt,
    build_read_prompt,
    chunk_stream,
    draft_step,
    run_lifecycle,
    truncate_text_memory,
)
from .eval import (
    EvalInstance,
    EvalReport,
    EvalSuite,
    PipelineConfig,
    budget_sweep,
    extract_boxed,
    inject_evidence,
    make_suite,
    normalize_answer,
    region_precision,
    relative_drop,
    sem_match,
    significance,
    summarize_runs,
    ttest_ind,
)
from .objectives import (
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
from .utils import errors, warnings

# Using `__name__` attribute instead of directly using the name as a string
# so the linter doesn't complaint about unused imports in the top module
__all__ = [
    # modules
    "errors",
    "warnings",
    # classes
    Block.__name__,
    InlineSpan.__name__,
    PriorityClass.__name__,
    PriorityConfig.__name__,
    SalienceTree.__name__,
    LayoutBox.__name__,
    PageLayout.__name__,
    MemoryImage.__name__,
    StyleSheet.__name__,
    Renderer.__name__,
    Rendering.__name__,
    RenderedMemory.__name__,
    BudgetSchedule.__name__,
    LegibilityModel.__name__,
    Chunk.__name__,
    ContextStream.__name__,
    Tokenizer.__name__,
    WhitespaceTokenizer.__name__,
    CostLedger.__name__,
    MemoryState.__name__,
    DrafterClient.__name__,
    ReaderClient.__name__,
    MockDrafter.__name__,
    MockReader.__name__,
    HttpClientConfig.__name__,
    HttpDrafter.__name__,
    HttpReader.__name__,
    EvalInstance.__name__,
    EvalSuite.__name__,
    EvalReport.__name__,
    PipelineConfig.__name__,
    TaskSpec.__name__,
    RolloutGroup.__name__,
    AdvantageSet.__name__,
    TrainingConfig.__name__,
    # functions
    normalize_source.__name__,
    parse.__name__,
    priority_class.__name__,
    layout.__name__,
    rasterize.__name__,
    benchmark.__name__,
    max_pixels.__name__,
    visual_token_count.__name__,
    fit_dimensions.__name__,
    fit_to_budget.__name__,
    downsample.__name__,
    legible_boxes.__name__,
    chunk_stream.__name__,
    truncate_text_memory.__name__,
    build_draft_prompt.__name__,
    build_read_prompt.__name__,
    draft_step.__name__,
    run_lifecycle.__name__,
    answer.__name__,
    answer_text.__name__,
    sem_match.__name__,
    extract_boxed.__name__,
    normalize_answer.__name__,
    relative_drop.__name__,
    ttest_ind.__name__,
    inject_evidence.__name__,
    region_precision.__name__,
    budget_sweep.__name__,
    make_suite.__name__,
    summarize_runs.__name__,
    significance.__name__,
    group_advantage.__name__,
    aggregate_advantage.__name__,
    build_task_suite.__name__,
    scenario_reward.__name__,
    score_group.__name__,
]

__author__ = "Martin Larralde <martin.larralde@embl.de>"
__license__ = "MIT"
__version__ = "0.1.0"
