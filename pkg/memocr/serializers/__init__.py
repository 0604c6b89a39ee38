from .base import BaseSerializer
from .csv import CsvSerializer
from .json import JsonSerializer

__all__ = ["BaseSerializer", "CsvSerializer", "JsonSerializer"]
