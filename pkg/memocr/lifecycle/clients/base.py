import abc
import threading
import typing

if typing.TYPE_CHECKING:
    from ...render.pipeline import RenderedMemory

__all__ = ["DrafterClient", "ReaderClient", "SerializedDrafter", "SerializedReader"]


class DrafterClient(abc.ABC):
    """The model updating the rich-text memory from a new chunk.

    Drafters never receive the memory budget: the same memory is drafted
    whatever the budget it is later read at.
    """

    @abc.abstractmethod
    def draft(self, previous: str, chunk: str, question: str, prompt: str) -> str:
        """Get the updated memory after reading ``chunk``.

        Arguments:
            previous (str): The memory drafted at the previous step.
            chunk (str): The text of the current chunk.
            question (str): The question the memory should help answer.
            prompt (str): The complete drafting prompt.

        Raises:
            ClientError: When the client could not produce a memory.

        """
        return NotImplemented  # type: ignore


class ReaderClient(abc.ABC):
    """The model answering a question from a memory."""

    @abc.abstractmethod
    def read(self, memory: "RenderedMemory", question: str, prompt: str) -> str:
        """Answer a question from a budget-fitted memory image.

        Raises:
            ClientError: When the client could not produce an answer.

        """
        return NotImplemented  # type: ignore

    @abc.abstractmethod
    def read_text(self, memory: str, question: str, prompt: str) -> str:
        """Answer a question from a textual memory.

        Raises:
            ClientError: When the client could not produce an answer.

        """
        return NotImplemented  # type: ignore


class SerializedDrafter(DrafterClient):
    """A drafter wrapper allowing only one call at a time."""

    def __init__(self, client: DrafterClient):
        self.client = client
        self.lock = threading.Lock()

    def draft(self, previous: str, chunk: str, question: str, prompt: str) -> str:
        with self.lock:
            return self.client.draft(previous, chunk, question, prompt)


class SerializedReader(ReaderClient):
    """A reader wrapper allowing only one call at a time."""

    def __init__(self, client: ReaderClient):
        self.client = client
        self.lock = threading.Lock()

    def read(self, memory: "RenderedMemory", question: str, prompt: str) -> str:
        with self.lock:
            return self.client.read(memory, question, prompt)

    def read_text(self, memory: str, question: str, prompt: str) -> str:
        with self.lock:
            return self.client.read_text(memory, question, prompt)
