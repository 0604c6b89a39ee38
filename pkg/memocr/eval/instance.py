import typing
from typing import Any, Dict, List, Optional, Sequence

from ..lifecycle.stream import ContextStream, Tokenizer, chunk_stream
from ..utils.meta import typechecked

__all__ = ["EvalInstance"]


class EvalInstance(object):
    """A long-context question answering instance.

    The context is given either as pre-split ``chunks``, which are kept as
    they are, or as a raw ``context`` string which is chunked on demand.

    Attributes:
        id (str): The identifier of the instance, unique within a suite.
        question (str): The question asked about the context.
        gold_answers (list of str): The accepted answers, at least one.
        chunks (list of str, optional): The pre-split chunks of the context.
        context (str, optional): The raw context, if not pre-split.
        detail_question (str, optional): A question about a detail of the
            context, asked by the detail-oriented training task.
        detail_answers (list of str): The accepted answers of the detail
            question.
        evidence (list of str): The ground-truth evidence sentences.
        dataset (str): The name of the dataset the instance comes from.

    """

    __slots__ = (
        "id",
        "question",
        "gold_answers",
        "chunks",
        "context",
        "detail_question",
        "detail_answers",
        "evidence",
        "dataset",
    )

    @classmethod
    def from_dict(cls, data: typing.Mapping[str, Any]) -> "EvalInstance":
        """Create an instance from a decoded JSON record.

        Raises:
            KeyError: When a required field is missing.
            TypeError: When a field has the wrong type.
            ValueError: When a field has an invalid value.

        """
        return cls(
            str(data["id"]),
            data["question"],
            list(data["gold_answers"]),
            chunks=data.get("chunks"),
            context=data.get("context"),
            detail_question=data.get("detail_question"),
            detail_answers=list(data.get("detail_answers", ())),
            evidence=list(data.get("evidence", ())),
            dataset=data.get("dataset", "synthetic"),
        )

    @typechecked()
    def __init__(
        self,
        id: str,
        question: str,
        gold_answers: Sequence[str],
        chunks: Optional[Sequence[str]] = None,
        context: Optional[str] = None,
        detail_question: Optional[str] = None,
        detail_answers: Sequence[str] = (),
        evidence: Sequence[str] = (),
        dataset: str = "synthetic",
    ):
        if not any(gold.strip() for gold in gold_answers):
            raise ValueError("an instance needs at least one gold answer")
        if chunks is None and context is None:
            raise ValueError("an instance needs either `chunks` or `context`")
        if chunks is not None and context is not None:
            raise ValueError("`chunks` and `context` are mutually exclusive")
        texts = chunks if chunks is not None else [context]
        if not any(text.strip() for text in texts):  # type: ignore
            raise ValueError("the context of an instance cannot be empty")

        self.id = id
        self.question = question
        self.gold_answers: List[str] = list(gold_answers)
        self.chunks: Optional[List[str]] = list(chunks) if chunks is not None else None
        self.context = context
        self.detail_question = detail_question
        self.detail_answers: List[str] = list(detail_answers)
        self.evidence: List[str] = list(evidence)
        self.dataset = dataset

    def __repr__(self) -> str:
        return f"<EvalInstance {self.id!r}: {self.question!r}>"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EvalInstance):
            return self.to_dict() == other.to_dict()
        return False

    def __hash__(self) -> int:
        return hash((EvalInstance, self.id))

    def stream(
        self, chunk_size: int = 5000, tokenizer: Optional[Tokenizer] = None
    ) -> ContextStream:
        """Get the context of the instance as a stream of chunks."""
        if self.chunks is not None:
            return ContextStream.from_chunks(self.chunks, tokenizer)
        return chunk_stream(typing.cast(str, self.context), chunk_size, tokenizer)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "id": self.id,
            "dataset": self.dataset,
            "question": self.question,
            "gold_answers": list(self.gold_answers),
        }
        if self.chunks is not None:
            data["chunks"] = list(self.chunks)
        else:
            data["context"] = self.context
        if self.detail_question is not None:
            data["detail_question"] = self.detail_question
            data["detail_answers"] = list(self.detail_answers)
        data["evidence"] = list(self.evidence)
        return data
