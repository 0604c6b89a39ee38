"""Prompt templates of the drafting and reading stages.

Templates are assembled by concatenation rather than `str.format`, since
the reading instruction contains literal braces.
"""

from typing import Optional

from .stream import Tokenizer, default_tokenizer

__all__ = [
    "DRAFT_INSTRUCTIONS",
    "READ_INSTRUCTIONS",
    "build_draft_prompt",
    "build_read_prompt",
    "build_text_read_prompt",
    "prompt_overhead",
]

DRAFT_INSTRUCTIONS = (
    "You are given a problem, an article, and a previous memory.\n"
    "You should draft the memory in markdown format with the crucial "
    "information in it that helps to answer the problem.\n"
    "In your markdown draft, you may use different headings to arrange the "
    "font sizes and styles of the information.\n"
    "e.g., more important information should be emphasized and more visible "
    "(larger font size, bolder, etc.), in case the rendered image can be "
    "clearly read."
)

READ_INSTRUCTIONS = (
    "You are presented with a problem and a previous memory. Please answer "
    "the problem based on the previous memory and put the answer in \\boxed{}."
)


def build_draft_prompt(problem: str, article: str, memory: str) -> str:
    """Build the prompt asking a drafter to update the memory.

    Example:
        >>> prompt = memocr.build_draft_prompt("Who?", "text", "")
        >>> prompt.endswith("The draft memory, in markdown format:")
        True
        >>> "<memory>\\n\\n</memory>" in prompt
        True

    """
    return (
        DRAFT_INSTRUCTIONS
        + "\n\n<problem>\n"
        + problem
        + "\n</problem>\n<article>\n"
        + article
        + "\n</article>\n<memory>\n"
        + memory
        + "\n</memory>\n\nThe draft memory, in markdown format:"
    )


def build_read_prompt(problem: str) -> str:
    """Build the prompt sent along the memory image to a reader."""
    return READ_INSTRUCTIONS + "\n\n<problem>" + problem + "</problem>\n\nYour answer:"


def build_text_read_prompt(problem: str, memory: str) -> str:
    """Build the prompt of a reader given a textual memory instead of an image."""
    return (
        READ_INSTRUCTIONS
        + "\n\n<memory>\n"
        + memory
        + "\n</memory>\n\n<problem>"
        + problem
        + "</problem>\n\nYour answer:"
    )


def prompt_overhead(problem: str, tokenizer: Optional[Tokenizer] = None) -> int:
    """Count the tokens of a drafting prompt besides the article and memory."""
    tokenizer = tokenizer if tokenizer is not None else default_tokenizer()
    return tokenizer.count(build_draft_prompt(problem, "", ""))
