"""Answer matching and report arithmetic.
"""

import math
import re
import string
import typing
from typing import Iterable, Optional, Sequence

import numpy
import scipy.stats

from ..utils.errors import DegenerateSamples, UndefinedReference

__all__ = [
    "TTestResult",
    "normalize_answer",
    "extract_boxed",
    "sem_match",
    "relative_drop",
    "ttest_ind",
]

_BOXED = re.compile(r"\\boxed\{")
_PUNCTUATION = str.maketrans("", "", string.punctuation)
_WHITESPACE = re.compile(r"\s+")


class TTestResult(typing.NamedTuple):
    """The outcome of a two-sample t-test."""

    statistic: float
    pvalue: float
    df: float


def normalize_answer(text: str) -> str:
    """Normalize an answer before matching.

    Example:
        >>> memocr.normalize_answer("  Gene   MacLellan. ")
        'gene maclellan'

    """
    lowered = text.lower().translate(_PUNCTUATION)
    return _WHITESPACE.sub(" ", lowered).strip()


def extract_boxed(text: str) -> Optional[str]:
    """Extract the content of the last balanced ``\\boxed{...}`` marker.

    Example:
        >>> memocr.extract_boxed("so the answer is \\\\boxed{a{b}c}")
        'a{b}c'
        >>> memocr.extract_boxed("no marker") is None
        True

    """
    found: Optional[str] = None
    for match in _BOXED.finditer(text):
        depth = 1
        for position in range(match.end(), len(text)):
            if text[position] == "{":
                depth += 1
            elif text[position] == "}":
                depth -= 1
                if depth == 0:
                    found = text[match.end() : position]
                    break
    return found


def sem_match(prediction: str, golds: Iterable[str]) -> bool:
    """Check a prediction with sub-word exact match.

    The boxed part of the prediction is used if there is one. A prediction
    matches when one of the normalized gold answers is a contiguous
    substring of the normalized prediction.

    Example:
        >>> memocr.sem_match("\\\\boxed{Gene MacLellan}", ["Gene MacLellan"])
        True
        >>> memocr.sem_match("Greg Brown", ["Gene MacLellan"])
        False

    """
    boxed = extract_boxed(prediction)
    candidate = normalize_answer(boxed if boxed is not None else prediction)
    for gold in golds:
        normalized = normalize_answer(gold)
        if normalized and normalized in candidate:
            return True
    return False


def relative_drop(accuracy: float, reference: float) -> float:
    """Get the signed change of an accuracy relative to a reference, in %.

    Raises:
        UndefinedReference: When the reference accuracy is zero.

    Example:
        >>> round(memocr.relative_drop(62.2, 74.6), 1)
        -16.6

    """
    if reference == 0:
        raise UndefinedReference("relative drop against a zero reference")
    return (accuracy - reference) / reference * 100.0


def ttest_ind(samples_a: Sequence[float], samples_b: Sequence[float]) -> TTestResult:
    """Run a two-sided two-sample t-test without assuming equal variances.

    Raises:
        DegenerateSamples: When a sample has fewer than two values, or
            when both samples have a zero variance.

    """
    a = numpy.asarray(samples_a, dtype=numpy.float64)
    b = numpy.asarray(samples_b, dtype=numpy.float64)
    if len(a) < 2 or len(b) < 2:
        raise DegenerateSamples("each sample needs at least two values")

    var_a = a.var(ddof=1) / len(a)
    var_b = b.var(ddof=1) / len(b)
    if var_a + var_b == 0:
        raise DegenerateSamples("both samples have a zero variance")

    statistic = (a.mean() - b.mean()) / math.sqrt(var_a + var_b)
    df = (var_a + var_b) ** 2 / (var_a ** 2 / (len(a) - 1) + var_b ** 2 / (len(b) - 1))
    pvalue = 2.0 * scipy.stats.t.sf(abs(statistic), df)
    return TTestResult(float(statistic), float(min(pvalue, 1.0)), float(df))
