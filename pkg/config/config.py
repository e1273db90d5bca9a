# Configuration for the Romanian GEC corpus toolkit
import copy
import os
from typing import Any, Dict, Iterable, Mapping, Optional

import yaml
from dotenv import load_dotenv

from src.confusion.confusion_generator import confusion_from_section
from src.noise.noise_injector import OpDistribution, default_mu
from src.taxonomy.error_taxonomy import Taxonomy, default_taxonomy
from src.utils.errors import ConfigurationError

load_dotenv()


class Config:
    # Toolkit configuration file
    CONFIG_PATH = os.getenv("GEC_TOOLKIT_CONFIG", "config/default_config.yaml")

    # Data paths
    CES_SEED_DIR = "data/ces_seed/"
    LLM_FIXTURES_PATH = "data/llm_fixtures/recorded_exchanges.jsonl"
    SAMPLE_CORPUS_PATH = "data/sample_corpus/legal_sample.txt"
    OUTPUT_PATH = "data/output/"
    LOGS_PATH = "logs/"

    # OpenAI settings (the key is read from the variable named by llm.api_key_env)
    OPENAI_MODEL = "gpt-4o"
    LLM_TEMPERATURE = 0.7
    LLM_MAX_RETRIES = 3
    LLM_BACKOFF_SECONDS = 1.0
    LLM_MAX_IN_FLIGHT = 4

    # Generation settings
    MAX_WORKERS = 4
    DEFAULT_SEED = 13

    # Decoding settings recorded on score reports
    TOP_P = 0.9
    BEAM_SIZE = 5

    @classmethod
    def ensure_directories(cls):
        """Ensure all required directories exist"""
        directories = [
            cls.CES_SEED_DIR,
            os.path.dirname(cls.LLM_FIXTURES_PATH),
            os.path.dirname(cls.SAMPLE_CORPUS_PATH),
            cls.OUTPUT_PATH,
            cls.LOGS_PATH,
        ]

        for directory in directories:
            os.makedirs(directory, exist_ok=True)


def _mu_dict(mu: OpDistribution) -> Dict[str, float]:
    return {"substitution": mu.mu_substitution, "deletion": mu.mu_deletion,
            "insertion": mu.mu_insertion, "keep": mu.mu_keep}


def default_settings() -> Dict[str, Any]:
    """Built-in values for every documented key"""
    taxonomy = default_taxonomy()
    return {
        "shares": taxonomy.shares(),
        "method": {e.code: e.method.value for e in taxonomy},
        "noise": {
            "mu": _mu_dict(default_mu()),
            "char_mu": _mu_dict(default_mu()),
            "swap_share": 0.35,
            "bind_share": 0.7,
            "keyboard_proximity": {},
            "diacritic_pairs": {},
            "common_misspellings": {},
        },
        "confusion": {
            "probability": 0.3,
            "lists": {},
            "punct_matrix": {},
        },
        "llm": {
            "model_id": Config.OPENAI_MODEL,
            "temperature": Config.LLM_TEMPERATURE,
            "endpoint": None,
            "api_key_env": "OPENAI_API_KEY",
            "fixture_path": None,
            "fixture_miss_response": "NO",
            "max_retries": Config.LLM_MAX_RETRIES,
            "backoff_seconds": Config.LLM_BACKOFF_SECONDS,
            "max_in_flight": Config.LLM_MAX_IN_FLIGHT,
            "ces_dir": Config.CES_SEED_DIR,
        },
        "generation": {
            "max_workers": Config.MAX_WORKERS,
            "seed": Config.DEFAULT_SEED,
        },
        "decoding": {
            "top_p": Config.TOP_P,
            "beam_size": Config.BEAM_SIZE,
        },
    }


# sections whose keys are open (codes, symbols, list names)
_OPEN_SECTIONS = {"shares", "method", "noise.mu", "noise.char_mu", "noise.keyboard_proximity",
                  "noise.diacritic_pairs", "noise.common_misspellings", "confusion.lists",
                  "confusion.punct_matrix"}


class ToolkitConfig:
    """Merged toolkit settings addressed by dotted keys (e.g. `llm.temperature`)"""

    def __init__(self, data: Optional[Mapping] = None):
        self.data: Dict[str, Any] = copy.deepcopy(dict(data)) if data is not None else default_settings()

    def get(self, key: str, default: Any = None) -> Any:
        node: Any = self.data
        for part in key.split("."):
            if not isinstance(node, Mapping) or part not in node:
                return default
            node = node[part]
        return node

    def set(self, key: str, value: Any) -> None:
        parts = key.split(".")
        node = self.data
        for depth, part in enumerate(parts[:-1]):
            prefix = ".".join(parts[:depth + 1])
            if part not in node:
                if ".".join(parts[:depth]) not in _OPEN_SECTIONS:
                    raise ConfigurationError(f"unknown configuration key '{key}'", key=key)
                node[part] = {}
            if not isinstance(node[part], dict):
                raise ConfigurationError(f"'{prefix}' is not a section", key=key)
            node = node[part]
        parent = ".".join(parts[:-1])
        if parts[-1] not in node and parent not in _OPEN_SECTIONS:
            raise ConfigurationError(f"unknown configuration key '{key}'", key=key)
        node[parts[-1]] = value

    def section(self, name: str) -> Dict[str, Any]:
        value = self.get(name, {})
        return copy.deepcopy(value) if isinstance(value, Mapping) else {}

    def taxonomy(self) -> Taxonomy:
        """Error taxonomy with configured shares and generation methods"""
        return default_taxonomy().with_overrides(self.section("shares"), self.section("method"))

    def to_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self.data)

    def validate(self) -> None:
        """Fail fast on inconsistent values; raises ConfigurationError naming the key"""
        self.taxonomy()
        noise = self.section("noise")
        for name in ("mu", "char_mu"):
            try:
                OpDistribution.from_config(noise.get(name))
            except ConfigurationError as e:
                raise ConfigurationError(str(e), key=f"noise.{name}")
        for name in ("swap_share", "bind_share"):
            _check_fraction(noise.get(name), f"noise.{name}")
        _check_fraction(self.get("confusion.probability"), "confusion.probability")
        confusion_from_section(self.section("confusion"))

        temperature = _number(self.get("llm.temperature"), "llm.temperature")
        if not 0.0 <= temperature <= 2.0:
            raise ConfigurationError(f"llm.temperature must lie in [0, 2], got {temperature}", key="llm.temperature")
        for key in ("llm.max_retries", "llm.max_in_flight", "generation.max_workers", "decoding.beam_size"):
            if int(_number(self.get(key), key)) < 1:
                raise ConfigurationError(f"{key} must be at least 1", key=key)
        if _number(self.get("llm.backoff_seconds"), "llm.backoff_seconds") < 0:
            raise ConfigurationError("llm.backoff_seconds must be non-negative", key="llm.backoff_seconds")
        _check_fraction(self.get("decoding.top_p"), "decoding.top_p")


def _number(value: Any, key: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f"{key} must be a number, got {value!r}", key=key)


def _check_fraction(value: Any, key: str) -> None:
    number = _number(value, key)
    if not 0.0 <= number <= 1.0:
        raise ConfigurationError(f"{key} must lie in [0, 1], got {number}", key=key)


def _merge(config: ToolkitConfig, data: Mapping, prefix: str = "") -> None:
    for name, value in data.items():
        key = f"{prefix}{name}"
        if isinstance(value, Mapping) and isinstance(config.get(key), Mapping):
            _merge(config, value, f"{key}.")
        else:
            config.set(key, copy.deepcopy(value))


def parse_override(text: str):
    """Split `key=value`; the value is read as YAML so numbers and lists keep their type"""
    if "=" not in text:
        raise ConfigurationError(f"override '{text}' must look like key=value")
    key, raw = text.split("=", 1)
    key = key.strip()
    if not key:
        raise ConfigurationError(f"override '{text}' has an empty key")
    try:
        value = yaml.safe_load(raw)
    except yaml.YAMLError as e:
        raise ConfigurationError(f"cannot parse value of '{key}': {e}", key=key)
    # YAML 1.1 reads yes/no/on/off as booleans; only true/false are meant that way
    if isinstance(value, bool) and raw.strip().lower() not in ("true", "false"):
        value = raw.strip()
    return key, value


def load_toolkit_config(path: Optional[str] = None, overrides: Iterable[str] = ()) -> ToolkitConfig:
    """
    Load the toolkit configuration

    Args:
        path: YAML file merged over the built-in defaults (optional)
        overrides: `key=value` strings applied last

    Returns:
        Validated ToolkitConfig
    """
    config = ToolkitConfig()
    if path:
        if not os.path.exists(path):
            raise ConfigurationError(f"configuration file not found: {path}")
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(f"cannot parse {path}: {e}")
        if not isinstance(data, Mapping):
            raise ConfigurationError(f"{path}: top level must be a mapping")
        _merge(config, data)
    for override in overrides:
        key, value = parse_override(override)
        config.set(key, value)
    config.validate()
    return config
