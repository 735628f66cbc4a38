"""Deterministic and seeded choices of pencil members."""

from __future__ import annotations

from collections.abc import Iterator
from itertools import islice
from math import gcd

import numpy as np

from desargues.pencil.pencil import PencilParam

DEFAULT_SAMPLES = 8
RANDOM_BOUND = 12


def _farey() -> Iterator[PencilParam]:
    yield PencilParam(1, 0)
    yield PencilParam(0, 1)
    m = 1
    while True:
        level = [(m, q) for q in range(1, m + 1) if gcd(m, q) == 1]
        positives: list[tuple[int, int]] = []
        for a, b in level:
            positives.append((a, b))
            if a != b:
                positives.append((b, a))
        yield from (PencilParam(a, b) for a, b in positives)
        yield from (PencilParam(a, -b) for a, b in positives)
        m += 1


def farey_params(count: int) -> list[PencilParam]:
    """Return ``(1:0), (0:1), (1:1), (1:-1), (2:1), (1:2), (2:-1), (1:-2), …``."""
    if count < 0:
        raise ValueError(f"sample count must be non-negative, got {count}")
    return list(islice(_farey(), count))


def random_params(count: int, seed: int, *, bound: int = RANDOM_BOUND) -> list[PencilParam]:
    """Return ``count`` distinct members drawn from integer ``(λ:μ)`` in ``[-bound, bound]``."""
    if count < 0:
        raise ValueError(f"sample count must be non-negative, got {count}")
    bound = max(bound, count)
    rng = np.random.default_rng(seed)
    params: list[PencilParam] = []
    while len(params) < count:
        lam, mu = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
        if lam == 0 and mu == 0:
            continue
        param = PencilParam(lam, mu)
        if param not in params:
            params.append(param)
    return params


def sample_params(count: int = DEFAULT_SAMPLES, seed: int | None = None) -> list[PencilParam]:
    """Farey sweep when ``seed`` is ``None``, otherwise a seeded random draw."""
    if seed is None:
        return farey_params(count)
    return random_params(count, seed)


__all__ = ["DEFAULT_SAMPLES", "farey_params", "random_params", "sample_params"]
