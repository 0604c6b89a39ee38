import io
import json
import typing
from os import PathLike, fspath
from typing import BinaryIO, Iterable, Iterator, List, Optional, Union

from ..utils.io import decompress, get_location, read_bytes, recode
from .instance import EvalInstance

__all__ = ["EvalSuite"]


class EvalSuite(typing.Sequence[EvalInstance]):
    """An ordered collection of evaluation instances.

    Suites can be loaded from JSON Lines files, with one instance record
    per line, or from JSON documents holding a list of records. Files may
    be compressed with gzip, bzip2 or xz, and may be given as a local path
    or as a URL.

    Malformed records do not prevent loading a suite: they are skipped
    with an `~memocr.warnings.InstanceWarning`, and counted in the
    `skipped` attribute.

    Attributes:
        instances (list of EvalInstance): The instances of the suite.
        skipped (int): The number of records that were skipped because
            they were malformed.
        path (str or None): The location the suite was loaded from.

    """

    instances: List[EvalInstance]
    skipped: int
    path: Optional[str]

    def __init__(
        self,
        handle: Union[BinaryIO, str, PathLike, None] = None,
        timeout: int = 5,
        instances: Iterable[EvalInstance] = (),
    ):
        """Create a new suite, optionally loading it from a file.

        Raises:
            TypeError: When the given ``handle`` could not be used to load
                a suite.
            ValueError: When the given ``handle`` contains a document not
                supported by any of the builtin parsers.

        """
        from ..parsers import BaseParser

        self.instances = list(instances)
        self.skipped = 0

        if handle is None:
            self.path = None
            return

        if isinstance(handle, (str, PathLike)):
            self.path = handle = fspath(handle)
        elif hasattr(handle, "read"):
            self.path = get_location(handle)
        else:
            raise TypeError(f"could not load a suite from {handle!r}")

        data = recode(decompress(read_bytes(handle, timeout)))
        for cls in BaseParser.__subclasses__():
            if cls.can_parse(self.path or "", data[: io.DEFAULT_BUFFER_SIZE]):
                cls(self).parse_from(io.BytesIO(data))
                break
        else:
            raise ValueError(f"could not find a parser to parse {handle!r}")

    def __repr__(self) -> str:
        return f"<EvalSuite of {len(self.instances)} instances>"

    def __len__(self) -> int:
        return len(self.instances)

    def __iter__(self) -> Iterator[EvalInstance]:
        return iter(self.instances)

    def __getitem__(self, index):  # type: ignore
        return self.instances[index]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, EvalSuite):
            return self.instances == other.instances
        return False

    def dump(self, file: BinaryIO) -> None:
        """Write the suite to a binary file handle in JSON Lines format."""
        for instance in self.instances:
            line = json.dumps(instance.to_dict(), ensure_ascii=False, sort_keys=True)
            file.write(line.encode("utf-8"))
            file.write(b"\n")

    def dumps(self) -> str:
        s = io.BytesIO()
        self.dump(s)
        return s.getvalue().decode("utf-8")
