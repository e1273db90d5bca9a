"""
LLM client contract: an OpenAI-backed client for real runs and a fixture client that
replays recorded answers for hermetic runs
"""
import json
import logging
import os
import threading
from collections import deque
from dataclasses import asdict, dataclass
from typing import Deque, Dict, List, Optional

from ..utils.errors import ConfigurationError, LlmClientError
from ..utils.seeding import stable_hash

logger = logging.getLogger(__name__)

DEFAULT_CALL_HISTORY = 100


@dataclass(frozen=True)
class LlmRequest:
    prompt: str
    temperature: float
    model_id: str

    def to_dict(self) -> Dict:
        return asdict(self)

    def key(self) -> str:
        """SHA-256 of the canonical JSON form; identical requests share a key"""
        return stable_hash(self.to_dict())


@dataclass(frozen=True)
class LlmResponse:
    text: str


class LlmClient:
    """Base class; subclasses turn a request into the model's raw text answer"""

    def complete(self, request: LlmRequest) -> LlmResponse:
        raise NotImplementedError


class OpenAIClient(LlmClient):
    def __init__(self, api_key: Optional[str] = None, endpoint: Optional[str] = None, timeout: float = 60.0):
        """
        Initialize the OpenAI chat-completions client

        Args:
            api_key: API token; read from OPENAI_API_KEY when omitted
            endpoint: Optional base URL of an OpenAI-compatible server
            timeout: Per-request timeout in seconds
        """
        try:
            from openai import OpenAI
        except ImportError as e:
            raise ConfigurationError(f"the openai package is required for live LLM calls: {e}")
        api_key = api_key or os.getenv("OPENAI_API_KEY", "")
        if not api_key:
            raise ConfigurationError("no LLM API key; set OPENAI_API_KEY or llm.api_key_env", key="llm.api_key_env")
        self._client = OpenAI(api_key=api_key, base_url=endpoint or None, timeout=timeout)

    def complete(self, request: LlmRequest) -> LlmResponse:
        try:
            response = self._client.chat.completions.create(
                model=request.model_id,
                messages=[{"role": "user", "content": request.prompt}],
                temperature=request.temperature,
            )
            return LlmResponse(response.choices[0].message.content or "")
        except Exception as e:
            raise LlmClientError(f"LLM request failed: {e}") from e


class FixtureClient(LlmClient):
    """
    Offline stand-in keyed by request hash

    Fixture files are JSONL; each line holds a `request` object (prompt, temperature,
    model_id) and a `response` object ({"text": ...}).
    """

    def __init__(self, fixtures: Optional[Dict[str, str]] = None, miss_response: Optional[str] = None,
                 history: int = DEFAULT_CALL_HISTORY):
        self._responses: Dict[str, str] = dict(fixtures or {})
        self.miss_response = miss_response
        # only the most recent requests are kept; call_count keeps the total
        self.calls: Deque[LlmRequest] = deque(maxlen=history)
        self.call_count = 0
        self._lock = threading.Lock()

    @classmethod
    def from_file(cls, path: str, miss_response: Optional[str] = None) -> "FixtureClient":
        client = cls(miss_response=miss_response)
        with open(path, "r", encoding="utf-8") as f:
            for line_number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    record = json.loads(line)
                    request = LlmRequest(**record["request"])
                    client.record(request, record["response"]["text"])
                except (ValueError, KeyError, TypeError) as e:
                    raise ConfigurationError(f"{path}:{line_number}: bad fixture record: {e}")
        logger.info("loaded %d LLM fixtures from %s", len(client), path)
        return client

    def __len__(self) -> int:
        return len(self._responses)

    def record(self, request: LlmRequest, text: str) -> None:
        self._responses[request.key()] = text

    def save(self, path: str, requests: List[LlmRequest]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            for request in requests:
                record = {"request": request.to_dict(), "response": {"text": self._responses[request.key()]}}
                f.write(json.dumps(record, ensure_ascii=False) + "\n")

    def complete(self, request: LlmRequest) -> LlmResponse:
        with self._lock:
            self.calls.append(request)
            self.call_count += 1
        text = self._responses.get(request.key())
        if text is None:
            if self.miss_response is None:
                raise LlmClientError(f"no fixture for request {request.key()[:12]}")
            text = self.miss_response
        return LlmResponse(text)


class BoundedClient(LlmClient):
    """Caps the number of requests in flight across worker threads"""

    def __init__(self, inner: LlmClient, max_in_flight: int):
        if max_in_flight < 1:
            raise ConfigurationError("llm.max_in_flight must be at least 1", key="llm.max_in_flight")
        self.inner = inner
        self._slots = threading.BoundedSemaphore(max_in_flight)

    def complete(self, request: LlmRequest) -> LlmResponse:
        with self._slots:
            return self.inner.complete(request)
