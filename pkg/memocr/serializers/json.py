import json

from .base import BaseSerializer


class JsonSerializer(BaseSerializer):
    """A serializer writing the complete report, records included."""

    format = "json"

    def dump(self, file):
        text = json.dumps(self.report.to_dict(), indent=2, sort_keys=True)
        file.write(text.encode("utf-8"))
        file.write(b"\n")
