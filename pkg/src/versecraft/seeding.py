"""Deterministic seed derivation.

Python's builtin ``hash`` is salted per process, so every derived seed goes
through sha256 instead. Any JSON-ish scalars can be mixed in.
"""
from __future__ import annotations

import hashlib


def derive_seed(*parts: object) -> int:
    """A stable 63-bit seed from the given labels."""
    joined = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(joined.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1
