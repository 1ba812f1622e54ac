"""
Seeded random streams.

Every random draw in an experiment goes through an RngState. A run's master
seed is split with numpy's SeedSequence: seed index ``i`` owns the sequence
``SeedSequence(master, spawn_key=(i,))`` and each consumer inside that seed
(noise, acquisition, initial design, ...) owns ``spawn_key=(i, k)`` for a
fixed ``k``. Adding seeds or consumers never shifts an existing stream.
"""

from typing import Dict, Optional, Tuple

import numpy as np

# Fixed sub-stream keys; append only.
STREAMS: Dict[str, int] = {
    "blackbox": 0,
    "initial": 1,
    "noise": 2,
    "acquisition": 3,
    "candidates": 4,
    "test_set": 5,
    "t_check": 6,
}


class RngState:
    """
    A numpy Generator together with the seed material that produced it.

    Identical seed and identical call sequence give bit-identical outputs.
    ``draws`` counts calls made through this wrapper (the stream position).
    """

    def __init__(self, seed: int = 0, spawn_key: Tuple[int, ...] = ()):
        self.seed = int(seed)
        self.spawn_key = tuple(int(k) for k in spawn_key)
        self._sequence = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)
        self.generator = np.random.Generator(np.random.PCG64(self._sequence))
        self.draws = 0

    def __repr__(self) -> str:
        return f"RngState(seed={self.seed}, spawn_key={self.spawn_key}, draws={self.draws})"

    def child(self, key: int) -> "RngState":
        """Independent stream keyed by ``key`` below this one."""
        return RngState(self.seed, self.spawn_key + (int(key),))

    def stream(self, name: str) -> "RngState":
        """Named sub-stream (see STREAMS)."""
        return self.child(STREAMS[name])

    def for_seed(self, seed_index: int) -> "RngState":
        return self.child(seed_index)

    def uniform_open_closed(self, size: Optional[int] = None):
        """Uniform draws on (0, 1]."""
        self.draws += 1
        return 1.0 - self.generator.random(size)

    def uniform(self, low, high, size=None):
        self.draws += 1
        return self.generator.uniform(low, high, size)

    def standard_normal(self, size=None):
        self.draws += 1
        return self.generator.standard_normal(size)

    def integers(self, high: int, size=None):
        """Integers in [0, high)."""
        self.draws += 1
        return self.generator.integers(0, high, size=size)
