"""Seeded pool of rational sample points for numeric-q evaluation."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, TypeVar

from .exact_arith import PoleError

__all__ = ["DEFAULT_SEED", "MAX_RETRIES", "q0_pool", "with_numeric_q"]

DEFAULT_SEED = 20240611
MAX_RETRIES = 5

T = TypeVar("T")


def q0_pool(seed: int = DEFAULT_SEED, size: int = 16) -> list[Fraction]:
    """Distinct rationals a/b with 1 <= a, b <= 100, never 0 or +-1.

    The only rational roots of unity are +-1, so every pool entry avoids
    the specializations where the Hecke algebra degenerates.
    """
    rng = random.Random(seed)
    out: list[Fraction] = []
    while len(out) < size:
        q0 = Fraction(rng.randint(1, 100), rng.randint(1, 100))
        if rng.random() < 0.25:
            q0 = -q0
        if abs(q0) != 1 and q0 not in out:
            out.append(q0)
    return out


def with_numeric_q(fn: Callable[[Fraction], T], seed: int = DEFAULT_SEED,
                   start: int = 0) -> tuple[Fraction, T]:
    """Call fn(q0) on successive pool entries until one avoids a pole."""
    pool = q0_pool(seed, start + MAX_RETRIES + 1)
    last: Exception | None = None
    for q0 in pool[start:start + MAX_RETRIES + 1]:
        try:
            return q0, fn(q0)
        except (PoleError, ZeroDivisionError) as exc:
            last = exc
    raise PoleError(f"no pole-free q0 after {MAX_RETRIES} retries") from last
