import json

from .base import SCHEMA_VERSION, BaseParser


class JsonParser(BaseParser):
    """A parser for JSON documents holding a list of instance records.

    The document is either a bare array of records, or an object with a
    ``schema_version`` and an ``instances`` array.
    """

    @classmethod
    def can_parse(cls, path, buffer):
        return buffer.lstrip().startswith(b"[") or str(path).endswith(".json")

    def parse_from(self, handle):
        document = json.load(handle)
        if isinstance(document, dict):
            version = document.get("schema_version", SCHEMA_VERSION)
            if version != SCHEMA_VERSION:
                raise ValueError(f"unsupported schema version: {version!r}")
            document = document.get("instances")
        if not isinstance(document, list):
            raise ValueError("expected a list of instance records")
        for index, record in enumerate(document):
            self.add_record(record, f"index {index}")
