"""Counter-mode seed derivation: every (seed, key...) pair names one stream."""

from __future__ import annotations

import numpy as np


def derive(seed, *keys: int) -> np.random.SeedSequence:
    """Child seed sequence for ``keys`` under ``seed``, without mutating it."""
    if isinstance(seed, np.random.SeedSequence):
        return np.random.SeedSequence(seed.entropy, spawn_key=tuple(seed.spawn_key) + keys)
    return np.random.SeedSequence(seed, spawn_key=keys)
