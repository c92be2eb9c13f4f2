"""Deterministic per-student random substreams.

Student i of a cohort draws from a Philox generator keyed by (seed, i), so
results are independent of execution order and thread count, comparisons
across schemes can share streams (common random numbers), and a student's
first k variates do not depend on how many are drawn in total.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numpy.random import Generator, Philox


def _key(seed: int, i: int) -> int:
    return (seed << 64) + i


def student_stream(seed: int, i: int) -> Generator:
    """Single-owner stream for student i under the given master seed."""
    if not (isinstance(seed, int) and seed >= 0):
        raise ValueError("seed must be a non-negative integer")
    return Generator(Philox(key=_key(seed, i)))


@lru_cache(maxsize=8)
def _cohort_uniforms(seed: int, n: int, count: int) -> np.ndarray:
    out = np.empty((n, count))
    for i in range(n):
        out[i] = Generator(Philox(key=_key(seed, i))).random(count)
    out.setflags(write=False)
    return out


def student_uniforms(seed: int, n: int, count: int) -> np.ndarray:
    """Read-only (n, count) matrix; row i is student i's first `count` uniforms."""
    if not (isinstance(seed, int) and seed >= 0):
        raise ValueError("seed must be a non-negative integer")
    if n < 1 or count < 1:
        raise ValueError("n and count must be positive")
    return _cohort_uniforms(seed, n, count)
