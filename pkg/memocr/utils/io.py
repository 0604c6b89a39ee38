"""Reading documents from paths, URLs and handles, and posting JSON.

Instance files and memory documents are small enough to be read whole:
every reader here loads the complete payload, decompresses it when its
magic bytes say so, and recodes it to UTF-8.
"""

import bz2
import gzip
import json
import lzma
import typing
import urllib.request
import warnings
from typing import Any, BinaryIO, Callable, Dict, Mapping, Optional, Tuple, Union

import chardet

__all__ = ["get_location", "read_bytes", "decompress", "recode", "read_text", "post_json"]

_CODECS: Tuple[Tuple[bytes, Callable[[bytes], bytes]], ...] = (
    (b"\x1f\x8b", gzip.decompress),
    (b"\xfd7zXZ\x00", lzma.decompress),
    (b"BZh", bz2.decompress),
)


def get_location(reader: typing.IO[bytes]) -> Optional[str]:
    """Get the path or URL a binary handle reads from, if it has one."""
    name = getattr(reader, "name", None)
    if isinstance(name, str):
        return name
    url = getattr(reader, "url", None)
    return url if isinstance(url, str) else None


def read_bytes(source: Union[str, BinaryIO], timeout: float = 5) -> bytes:
    """Read a whole binary payload from a path, a URL or a binary handle.

    Raises:
        FileNotFoundError: When ``source`` is neither an existing file nor
            a URL.
        urllib.error.URLError: When a URL cannot be retrieved.
        TypeError: When ``source`` is neither a string nor readable.

    """
    if isinstance(source, str):
        if "://" not in source:
            with open(source, "rb") as f:
                return f.read()
        request = urllib.request.Request(source, headers={"Accept-Encoding": "gzip"})
        with urllib.request.urlopen(request, timeout=timeout) as res:
            return typing.cast(bytes, res.read())
    if not hasattr(source, "read"):
        raise TypeError(f"cannot read from {source!r}")
    data = source.read()
    if not isinstance(data, bytes):
        raise TypeError(f"expected a binary handle, got {type(source).__name__}")
    return data


def decompress(data: bytes) -> bytes:
    """Decompress gzip, xz or bzip2 data, detected from its magic bytes.

    Example:
        >>> import gzip
        >>> from memocr.utils.io import decompress
        >>> decompress(gzip.compress(b"# Snowbird"))
        b'# Snowbird'
        >>> decompress(b"# Snowbird")
        b'# Snowbird'

    """
    for magic, decode in _CODECS:
        if data.startswith(magic):
            return decode(data)
    return data


def recode(data: bytes, encoding: Optional[str] = None) -> bytes:
    """Recode a document to UTF-8, guessing its encoding if needed.

    A `UnicodeWarning` is issued when the guessed encoding is not
    certain.
    """
    if not data:
        return data
    if encoding is None:
        guess: Dict[str, Any] = chardet.detect(data[:65536])
        encoding = guess["encoding"] or "utf-8"
        if encoding.lower() not in {"ascii", "utf-8"} and guess["confidence"] < 1.0:
            warnings.warn(
                f"unsound encoding, assuming {encoding} ({guess['confidence']:.0%} confidence)",
                UnicodeWarning,
                stacklevel=3,
            )
    if encoding.lower() in {"ascii", "utf-8", "utf8"}:
        return data
    return data.decode(encoding, errors="replace").encode("utf-8")


def read_text(source: Union[str, BinaryIO], encoding: Optional[str] = None) -> str:
    """Read a whole text document from a path, URL or binary handle."""
    data = recode(decompress(read_bytes(source)), encoding)
    return data.decode("utf-8", errors="replace").replace("\r\n", "\n")


def post_json(
    url: str,
    payload: Mapping[str, Any],
    headers: Optional[Mapping[str, str]] = None,
    timeout: float = 60.0,
) -> Dict[str, Any]:
    """Send a JSON payload with ``POST`` and decode the JSON response.

    Raises:
        urllib.error.URLError: When the endpoint cannot be reached or
            answers with an HTTP error status.
        ValueError: When the response body is not a JSON object.

    """
    body = json.dumps(payload).encode("utf-8")
    request = urllib.request.Request(url, data=body, method="POST")
    request.add_header("Content-Type", "application/json")
    for key, value in (headers or {}).items():
        request.add_header(key, value)
    with urllib.request.urlopen(request, timeout=timeout) as res:
        document = json.load(res)
    if not isinstance(document, dict):
        raise ValueError(f"expected a JSON object from {url}")
    return document
