"""
Deterministic seed derivation and hashing helpers
"""
import hashlib
import json
from typing import Any

import numpy as np


def canonical_json(value: Any) -> str:
    """Serialize a value with sorted keys and no whitespace so equal values hash equally"""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def stable_hash(value: Any) -> str:
    return hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()


def derive_seed(global_seed: int, *parts: Any) -> int:
    """
    Derive a child seed from a global seed and an identifying key

    Args:
        global_seed: Run-level seed
        *parts: Anything identifying the unit of work (sentence id, error code...)

    Returns:
        A 63-bit non-negative integer, identical across runs and platforms
    """
    digest = hashlib.sha256(canonical_json([int(global_seed), *[str(p) for p in parts]]).encode("utf-8"))
    return int.from_bytes(digest.digest()[:8], "big") >> 1


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)
