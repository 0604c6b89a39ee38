import abc
import typing
import warnings
from typing import Any, Optional

from ..eval.instance import EvalInstance
from ..utils.warnings import InstanceWarning

if typing.TYPE_CHECKING:
    from ..eval.suite import EvalSuite

SCHEMA_VERSION = 1


class BaseParser(abc.ABC):
    def __init__(self, suite: "EvalSuite"):
        self.suite: "EvalSuite" = suite

    @classmethod
    @abc.abstractmethod
    def can_parse(cls, path: str, buffer: bytes) -> bool:
        """Return `True` if this parser type can parse the given handle."""
        return NotImplemented  # type: ignore

    @abc.abstractmethod
    def parse_from(self, handle: typing.BinaryIO) -> None:
        return NotImplemented

    def skip(self, location: str, reason: str) -> None:
        self.suite.skipped += 1
        warnings.warn(
            f"skipping instance record at {location}: {reason}",
            InstanceWarning,
            stacklevel=4,
        )

    def add_record(self, record: Any, location: str) -> Optional[EvalInstance]:
        """Add a decoded record to the suite, or skip it with a warning."""
        if not isinstance(record, dict):
            self.skip(location, "record is not a JSON object")
            return None
        version = record.get("schema_version", SCHEMA_VERSION)
        if version != SCHEMA_VERSION:
            self.skip(location, f"unsupported schema version {version!r}")
            return None
        try:
            instance = EvalInstance.from_dict(record)
        except KeyError as err:
            self.skip(location, f"missing field {err.args[0]!r}")
            return None
        except (TypeError, ValueError) as err:
            self.skip(location, str(err))
            return None
        self.suite.instances.append(instance)
        return instance
