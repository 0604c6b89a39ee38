"""The ``memocr`` command line interface.
"""

import argparse
import json
import logging
import os
import sys
import typing
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .budget import DEFAULT_BUDGETS
from .eval.precision import inject_evidence, region_precision
from .eval.suite import EvalSuite
from .eval.sweep import PipelineConfig, budget_sweep
from .eval.synthetic import make_suite
from .lifecycle.clients.http import HttpClientConfig, HttpDrafter, HttpReader
from .lifecycle.memory import MemoryState
from .lifecycle.stream import default_tokenizer
from .objectives import VARIANTS, AdvantageSet, RolloutGroup, build_task_suite
from .render.pipeline import Renderer, benchmark
from .render.style import StyleSheet
from .salience import PriorityClass
from .utils.errors import MemocrError
from .utils.io import read_text

__all__ = ["build_parser", "main"]

logger = logging.getLogger("memocr")


def _budgets(value: str) -> List[int]:
    try:
        budgets = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid budget list: {value!r}") from None
    if not budgets:
        raise argparse.ArgumentTypeError("at least one budget is required")
    return budgets


def _write_json(data: Any, output: Optional[str]) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)


def _read_memory(path: str) -> MemoryState:
    text = read_text(path)
    return MemoryState(0, text, default_tokenizer().count(text))


# --- Commands ---------------------------------------------------------------


def _render(args: argparse.Namespace) -> int:
    markdown = read_text(args.input)
    style = StyleSheet.preset(args.style)
    memory = Renderer(style).render(markdown).fit(args.budget)
    output = args.output or os.path.splitext(args.input)[0] + ".png"
    with open(output, "wb") as f:
        f.write(memory.to_png())
    _write_json(
        {
            "width": memory.image.width,
            "height": memory.image.height,
            "visual_tokens": memory.visual_tokens,
            "scale_factor": memory.scale_factor,
            "budget": memory.budget,
        },
        None,
    )
    return 0


def _pipeline(args: argparse.Namespace) -> PipelineConfig:
    style = StyleSheet.preset(args.style)
    options: Dict[str, Any] = dict(
        chunk_size=args.chunk_size, style=style, seed=args.seed, threads=args.threads
    )
    if args.mock:
        # oracle runs keep the evidence in the body until it is injected
        return PipelineConfig.mock(promote_evidence=args.inject is None, **options)
    client = HttpClientConfig.from_env(args.endpoint, args.model)
    logger.info("using endpoint %s with model %s", client.url, client.model)
    return PipelineConfig(
        drafter_factory=lambda instance: HttpDrafter(client),
        reader_factory=lambda golds: HttpReader(client),
        **options,
    )


def _sweep(args: argparse.Namespace) -> int:
    config = _pipeline(args)
    suite = EvalSuite(args.instances)
    if not len(suite):
        logger.error("no valid instance in %s", args.instances)
        return 1

    os.makedirs(args.report_dir, exist_ok=True)
    image_dir = os.path.join(args.report_dir, "images") if args.images else None
    report = budget_sweep(suite, args.budgets, config, args.modality, args.inject, image_dir)
    report.skipped = suite.skipped

    for format in ("json", "csv"):
        path = os.path.join(args.report_dir, f"report.{format}")
        with open(path, "wb") as f:
            report.dump(f, format)
        logger.info("wrote %s", path)

    if len(report.failures()) == report.instance_count():
        logger.error("every instance failed")
        return 1
    return 0


def _inject(args: argparse.Namespace) -> int:
    memory = _read_memory(args.memory)
    for evidence in args.evidence:
        memory = inject_evidence(memory, args.region, evidence)
    if args.output is None:
        sys.stdout.write(memory.rich_text + "\n")
    else:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(memory.rich_text + "\n")
    return 0


def _stats(args: argparse.Namespace) -> int:
    memory = _read_memory(args.memory)
    stats = region_precision(memory, args.evidence, StyleSheet.preset(args.style))
    _write_json(stats.to_dict(), None)
    return 0


def _advantage(args: argparse.Namespace) -> int:
    with open(args.rewards, "rb") as f:
        group = RolloutGroup(json.load(f))
    weights = {task.id: task.weight for task in build_task_suite(variant=args.variant)}
    weights = {task: weight for task, weight in weights.items() if task in group.rewards}
    advantages = AdvantageSet.from_rewards(group, weights, args.mode)
    _write_json(advantages.to_dict(), args.output)
    return 0


def _serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(args.host, args.port, args.max_markdown, args.max_pixels)
    return 0


def _bench(args: argparse.Namespace) -> int:
    documents = [read_text(path) for path in args.documents]
    renderer = Renderer(StyleSheet.preset(args.style))
    result = benchmark(documents, args.runs, args.budget, renderer)
    logger.info("rendered %.1f samples/s", result.mean_throughput)
    _write_json(result.to_dict(), None)
    return 0


def _synth(args: argparse.Namespace) -> int:
    suite = make_suite(args.n, args.seed)
    if args.output is None:
        sys.stdout.write(suite.dumps())
    else:
        with open(args.output, "wb") as f:
            suite.dump(f)
    return 0


# --- Parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the ``memocr`` command."""
    parser = argparse.ArgumentParser(
        prog="memocr", description="Render, evaluate and score visual agent memories."
    )
    parser.add_argument("-V", "--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="log more events")
    parser.add_argument("-q", "--quiet", action="store_true", help="only log errors")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    style = argparse.ArgumentParser(add_help=False)
    style.add_argument("--style", default="default", help="the style preset to render with")

    render = commands.add_parser("render", parents=[style], help="render a Markdown memory")
    render.add_argument("input", help="the Markdown file to render")
    render.add_argument("-b", "--budget", type=int, help="the visual-token budget")
    render.add_argument("-o", "--output", help="the PNG file to write")
    render.set_defaults(func=_render)

    sweep = commands.add_parser("sweep", parents=[style], help="evaluate instances at budgets")
    sweep.add_argument("instances", help="a JSON Lines or JSON file of instances")
    sweep.add_argument("--budgets", type=_budgets, default=list(DEFAULT_BUDGETS))
    sweep.add_argument("--mock", action="store_true", help="use deterministic mock clients")
    sweep.add_argument("--endpoint", help="the chat-completion endpoint of HTTP clients")
    sweep.add_argument("--model", help="the model queried by HTTP clients")
    sweep.add_argument("--report-dir", default="report", help="where to write reports")
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--inject", choices=[c.value for c in PriorityClass])
    sweep.add_argument("--modality", choices=["visual", "text"], default="visual")
    sweep.add_argument("--images", action="store_true", help="save fitted memory images")
    sweep.add_argument("--threads", type=int, help="the number of concurrent instances")
    sweep.add_argument("--chunk-size", type=int, default=5000)
    sweep.set_defaults(func=_sweep)

    inject = commands.add_parser("inject", help="insert evidence into a memory region")
    inject.add_argument("memory", help="the Markdown memory to edit")
    inject.add_argument("--region", choices=[c.value for c in PriorityClass], required=True)
    inject.add_argument("--evidence", action="append", required=True)
    inject.add_argument("-o", "--output", help="the Markdown file to write")
    inject.set_defaults(func=_inject)

    stats = commands.add_parser("stats", parents=[style], help="measure region precision")
    stats.add_argument("memory", help="the Markdown memory to measure")
    stats.add_argument("--evidence", action="append", default=[])
    stats.set_defaults(func=_stats)

    advantage = commands.add_parser("advantage", help="compute advantages of a rollout group")
    advantage.add_argument("rewards", help="a JSON object mapping tasks to rewards")
    advantage.add_argument("--mode", choices=["std", "mean"], default="std")
    advantage.add_argument("--variant", choices=list(VARIANTS), default="full")
    advantage.add_argument("-o", "--output", help="the JSON file to write")
    advantage.set_defaults(func=_advantage)

    serve = commands.add_parser("serve", help="run the render service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--max-markdown", type=int, default=200_000)
    serve.add_argument("--max-pixels", type=int, default=4096 * 4096)
    serve.set_defaults(func=_serve)

    bench = commands.add_parser("bench", parents=[style], help="measure render throughput")
    bench.add_argument("documents", nargs="+", help="Markdown documents to render")
    bench.add_argument("--runs", type=int, default=5)
    bench.add_argument("-b", "--budget", type=int)
    bench.set_defaults(func=_bench)

    synth = commands.add_parser("synth", help="generate a synthetic suite")
    synth.add_argument("-n", type=int, default=50, help="the number of instances")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("-o", "--output", help="the JSON Lines file to write")
    synth.set_defaults(func=_synth)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the ``memocr`` command and return its exit code."""
    args = build_parser().parse_args(argv)
    if args.quiet:
        level = logging.ERROR
    else:
        level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        return typing.cast(int, args.func(args))
    except OSError as err:
        print(f"memocr: error: {err}", file=sys.stderr)
        return 2
    except (MemocrError, ValueError, TypeError) as err:
        print(f"memocr: error: {err}", file=sys.stderr)
        return 1
