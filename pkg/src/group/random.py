"""Randomness sources and uniform scalar sampling.

Production code draws from ``secrets.SystemRandom``. Tests and the oracle
harness inject ``random.Random(seed)`` or a ``ScriptedSource`` that replays
fixed draws, which is how a specific r or s is forced.
"""

import random
import secrets
from collections.abc import Iterable
from typing import Protocol, runtime_checkable

from src.errors import RngFailure

from .elements import Scalar

# A healthy source rejects with probability < 1/2 per draw
MAX_REJECTIONS = 1024


@runtime_checkable
class RandomSource(Protocol):
    """Anything with ``getrandbits`` (random.Random, secrets.SystemRandom)."""

    def getrandbits(self, k: int, /) -> int: ...


class ScriptedSource:
    """Replays a fixed sequence of draws; running dry is an RngFailure."""

    def __init__(self, values: Iterable[int]) -> None:
        self._values = iter(values)

    def getrandbits(self, k: int, /) -> int:
        try:
            value = next(self._values)
        except StopIteration:
            raise RngFailure("scripted source exhausted") from None
        if not 0 <= value < (1 << k):
            raise RngFailure(f"scripted value does not fit in {k} bits")
        return value


def system_source() -> RandomSource:
    return secrets.SystemRandom()


def seeded_source(seed: int) -> RandomSource:
    """Deterministic source for tests and toy demos only."""
    return random.Random(seed)


def random_scalar(rng: RandomSource, q: int) -> Scalar:
    """Uniform scalar in [1, q-1] by rejection sampling on [0, 2^ceil(log2 q)).

    Raises:
        RngFailure: the source failed or rejected MAX_REJECTIONS times in a row
    """
    bits = (q - 1).bit_length()
    for _ in range(MAX_REJECTIONS):
        try:
            candidate = rng.getrandbits(bits)
        except RngFailure:
            raise
        except Exception as e:
            raise RngFailure(f"random source failed: {e}") from e
        if 0 < candidate < q:
            return Scalar(candidate, q)
    raise RngFailure(f"{MAX_REJECTIONS} consecutive rejections")
