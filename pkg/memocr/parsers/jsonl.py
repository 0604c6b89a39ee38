import json

from .base import BaseParser


class JsonLinesParser(BaseParser):
    """A parser for JSON Lines files with one instance record per line."""

    @classmethod
    def can_parse(cls, path, buffer):
        return not buffer.strip() or buffer.lstrip().startswith(b"{")

    def parse_from(self, handle):
        for lineno, line in enumerate(handle, 1):
            text = line.decode("utf-8", errors="replace").strip()
            if not text:
                continue
            try:
                record = json.loads(text)
            except json.JSONDecodeError as err:
                self.skip(f"line {lineno}", f"invalid JSON ({err.msg})")
            else:
                self.add_record(record, f"line {lineno}")
