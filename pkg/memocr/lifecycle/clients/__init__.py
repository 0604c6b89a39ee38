from .base import DrafterClient, ReaderClient, SerializedDrafter, SerializedReader
from .http import HttpClientConfig, HttpDrafter, HttpReader
from .mock import MockDrafter, MockReader

__all__ = [
    "DrafterClient",
    "ReaderClient",
    "SerializedDrafter",
    "SerializedReader",
    "HttpClientConfig",
    "HttpDrafter",
    "HttpReader",
    "MockDrafter",
    "MockReader",
]
