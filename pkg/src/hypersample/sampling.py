"""Seeded sampling primitives and schedule-independent parallel trials.

Trial ``i`` of an experiment with master seed ``s`` always draws from
``numpy.random.default_rng([s, i])`` (PCG64 via SeedSequence), so aggregates
do not depend on how trials are split across workers.

Random density-p subsets come from a Fisher-Yates prefix: with ``perm = [0..n)``,
for ``i = 0..size-1`` draw ``j`` uniform in ``[i, n)`` and swap ``perm[i]``,
``perm[j]``; the subset is ``perm[:size]``. The offsets ``j - i`` for all ``i``
are drawn in one call ``rng.integers(0, n - arange(size))``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from numbers import Rational
from typing import Callable, Sequence, TypeVar

import numpy as np

T = TypeVar("T")


def as_fraction(x) -> Fraction:
    """Read a float as the decimal it prints as (0.29 -> 29/100), so floor(p*n) is what the user meant."""
    if isinstance(x, Rational):
        return Fraction(x)
    return Fraction(repr(float(x)))


def density_size(p, n: int) -> int:
    """floor(p * n), computed exactly."""
    return math.floor(as_fraction(p) * n)


def trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(index)])


def fisher_yates_prefix(rng: np.random.Generator, n: int, size: int) -> np.ndarray:
    """Uniform random ``size``-subset of range(n), as a boolean mask."""
    perm = list(range(n))
    if size:
        offsets = rng.integers(0, n - np.arange(size)).tolist()
        for i, off in enumerate(offsets):
            j = i + off
            perm[i], perm[j] = perm[j], perm[i]
    mask = np.zeros(n, dtype=bool)
    mask[perm[:size]] = True
    return mask


def run_trials(fn: Callable[[int], T], trials: int, threads: int = 1) -> list[T]:
    """Evaluate ``fn(i)`` for i in range(trials); the result list is in trial order for any thread count."""
    if threads <= 1 or trials <= 1:
        return [fn(i) for i in range(trials)]
    chunks = _chunks(trials, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda rg: [fn(i) for i in rg], chunks))
    return [x for part in parts for x in part]


def _chunks(total: int, parts: int) -> Sequence[range]:
    step = -(-total // parts)
    return [range(a, min(a + step, total)) for a in range(0, total, step)]
