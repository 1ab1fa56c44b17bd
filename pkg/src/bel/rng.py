"""Deterministic seed derivation for replicate fan-out.

Replicate and fold seeds are derived from a master seed and an index so
that results are independent of worker scheduling.
"""
from __future__ import annotations

import numpy as np

__all__ = ["spawn_seeds", "derive_seed"]


def spawn_seeds(master_seed: int, count: int) -> list[int]:
    """Return `count` distinct 64-bit child seeds derived from `master_seed`."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    ss = np.random.SeedSequence(int(master_seed))
    return [int(s) for s in ss.generate_state(count, dtype=np.uint64)]


def derive_seed(*parts: int) -> int:
    """Hash a tuple of integers (master seed, replicate index, role, ...) to a seed."""
    ss = np.random.SeedSequence([int(p) for p in parts])
    return int(ss.generate_state(1, dtype=np.uint64)[0])
