"""Clients talking to a chat-completion endpoint over HTTP.
"""

import base64
import logging
import os
import typing
import urllib.error
from typing import Any, Dict, List, Mapping, Optional

from ...utils.errors import ClientError
from ...utils.io import post_json
from .base import DrafterClient, ReaderClient

if typing.TYPE_CHECKING:
    from ...render.pipeline import RenderedMemory

__all__ = ["HttpClientConfig", "HttpDrafter", "HttpReader"]

logger = logging.getLogger(__name__)

ENV_ENDPOINT = "MEMOCR_ENDPOINT"
ENV_MODEL = "MEMOCR_MODEL"
ENV_API_KEY = "MEMOCR_API_KEY"


class HttpClientConfig(object):
    """The connection settings of a chat-completion endpoint.

    Attributes:
        endpoint (str): The base URL of the API, to which
            ``/chat/completions`` is appended unless already present.
        model (str): The name of the model to query.
        api_key (str or None): A bearer token sent with every request.
        timeout (float): The timeout of every request, in seconds.
        max_tokens (int): The maximum number of tokens to generate.
        temperature (float): The sampling temperature.
        top_p (float): The nucleus sampling threshold.

    """

    __slots__ = (
        "endpoint",
        "model",
        "api_key",
        "timeout",
        "max_tokens",
        "temperature",
        "top_p",
    )

    @classmethod
    def from_env(
        cls,
        endpoint: Optional[str] = None,
        model: Optional[str] = None,
        api_key: Optional[str] = None,
        environ: Optional[Mapping[str, str]] = None,
        **kwargs: Any,
    ) -> "HttpClientConfig":
        """Create a configuration, filling missing values from the environment.

        Raises:
            ValueError: When neither the arguments nor the environment give
                an endpoint and a model name.

        """
        env = os.environ if environ is None else environ
        endpoint = endpoint or env.get(ENV_ENDPOINT)
        model = model or env.get(ENV_MODEL)
        if not endpoint:
            raise ValueError(f"no endpoint given and ${ENV_ENDPOINT} is not set")
        if not model:
            raise ValueError(f"no model given and ${ENV_MODEL} is not set")
        return cls(endpoint, model, api_key or env.get(ENV_API_KEY), **kwargs)

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key: Optional[str] = None,
        timeout: float = 60.0,
        max_tokens: int = 2048,
        temperature: float = 1.0,
        top_p: float = 0.999,
    ):
        self.endpoint = endpoint
        self.model = model
        self.api_key = api_key
        self.timeout = timeout
        self.max_tokens = max_tokens
        self.temperature = temperature
        self.top_p = top_p

    def __repr__(self) -> str:
        # the token is never shown
        return f"{type(self).__name__}({self.endpoint!r}, {self.model!r})"

    @property
    def url(self) -> str:
        base = self.endpoint.rstrip("/")
        if base.endswith("/chat/completions"):
            return base
        return f"{base}/chat/completions"


class _HttpClient(object):
    def __init__(self, config: HttpClientConfig):
        self.config = config

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.config!r})"

    def _complete(self, content: Any) -> str:
        payload = {
            "model": self.config.model,
            "messages": [{"role": "user", "content": content}],
            "max_tokens": self.config.max_tokens,
            "temperature": self.config.temperature,
            "top_p": self.config.top_p,
        }
        headers: Dict[str, str] = {}
        if self.config.api_key:
            headers["Authorization"] = f"Bearer {self.config.api_key}"
        try:
            response = post_json(self.config.url, payload, headers, self.config.timeout)
            message = response["choices"][0]["message"]["content"]
        except urllib.error.HTTPError as err:
            raise ClientError(f"endpoint answered with HTTP {err.code}") from err
        except (urllib.error.URLError, OSError) as err:
            raise ClientError(f"could not reach endpoint: {err}") from err
        except (KeyError, IndexError, TypeError, ValueError) as err:
            raise ClientError(f"malformed completion response: {err!r}") from err
        if not isinstance(message, str):
            raise ClientError("completion content is not a string")
        logger.debug("completion of %i characters from %s", len(message), self.config.url)
        return message


class HttpDrafter(_HttpClient, DrafterClient):
    """A drafter sending text-only drafting prompts."""

    def draft(self, previous: str, chunk: str, question: str, prompt: str) -> str:
        return self._complete(prompt)


class HttpReader(_HttpClient, ReaderClient):
    """A reader sending the memory image as a base64 PNG along the prompt."""

    def read(self, memory: "RenderedMemory", question: str, prompt: str) -> str:
        encoded = base64.b64encode(memory.to_png()).decode("ascii")
        content: List[Dict[str, Any]] = [
            {"type": "image_url", "image_url": {"url": f"data:image/png;base64,{encoded}"}},
            {"type": "text", "text": prompt},
        ]
        return self._complete(content)

    def read_text(self, memory: str, question: str, prompt: str) -> str:
        return self._complete(prompt)
