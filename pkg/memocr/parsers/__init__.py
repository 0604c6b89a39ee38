from .base import BaseParser
from .json import JsonParser
from .jsonl import JsonLinesParser

__all__ = ["BaseParser", "JsonParser", "JsonLinesParser"]
