"""Exceptions raised by the library.

Every error type derives from `MemocrError` *and* from the builtin exception
that best describes it, so that code written against the standard library
(``except ValueError``) keeps working.
"""

import typing


class MemocrError(Exception):
    """The class for all errors raised by `memocr`."""

    pass


class InvalidBudget(MemocrError, ValueError):
    """A memory budget is not a strictly positive number of tokens."""

    pass


class WordTooWide(MemocrError, ValueError):
    """A single word does not fit the usable width of the canvas."""

    def __init__(self, word: str, width: int, usable: int):
        super().__init__(
            f"word {word!r} is {width}px wide, usable width is {usable}px"
        )
        self.word = word
        self.width = width
        self.usable = usable


class EmptyContext(MemocrError, ValueError):
    """A context stream would contain no token at all."""

    pass


class StepMismatch(MemocrError, ValueError):
    """A drafting step was given a chunk out of order."""

    pass


class ClientError(MemocrError, RuntimeError):
    """A drafter or reader client failed to produce an output.

    Attributes:
        step (int or None): The lifecycle step the failure happened at, if
            the error was raised while drafting.

    """

    def __init__(self, message: str, step: typing.Optional[int] = None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class GroupTooSmall(MemocrError, ValueError):
    """A rollout group has fewer than two rewards."""

    pass


class ZeroWeightSum(MemocrError, ValueError):
    """Task weights sum to zero, so advantages cannot be aggregated."""

    pass


class UndefinedReference(MemocrError, ZeroDivisionError):
    """A relative drop was requested against a zero reference accuracy."""

    pass


class DegenerateSamples(MemocrError, ValueError):
    """The samples given to a t-test do not define a test statistic."""

    pass
