"""Deterministic derivation of independent random streams from integer keys."""

from __future__ import annotations

import numpy as np


def derive_seed(*keys: int) -> int:
    """Collapse a key path into a single 32-bit seed.

    Stable across processes and platforms, so per-step / per-candidate /
    per-replication streams can be reproduced from one master seed.
    """
    if not keys:
        raise ValueError("at least one key is required")
    seq = np.random.SeedSequence([int(k) for k in keys])
    return int(seq.generate_state(1)[0])


def derived_rng(*keys: int) -> np.random.Generator:
    """Generator seeded from the given key path."""
    if not keys:
        raise ValueError("at least one key is required")
    return np.random.default_rng([int(k) for k in keys])
