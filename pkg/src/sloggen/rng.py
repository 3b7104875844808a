"""Seed derivation for independent, reproducible random streams.

Every niche gets its own seed, ``seed XOR splitmix64(niche_id)``, and from it
two ``random.Random`` streams: one for drawing fresh corpus samples and one
for mutation choices. Keeping the sampling stream separate means two runs
that differ only in scoring draw exactly the same fresh individuals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

MASK64 = (1 << 64) - 1

SAMPLE_STREAM = 0
MUTATE_STREAM = 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def niche_seed(seed: int, niche_id: int) -> int:
    return (seed & MASK64) ^ splitmix64(niche_id)


def stream_seed(seed: int, stream: int) -> int:
    return splitmix64(seed ^ splitmix64(stream + 0x5EED))


@dataclass
class NicheStreams:
    sample: random.Random
    mutate: random.Random

    @classmethod
    def for_niche(cls, seed: int, niche_id: int) -> NicheStreams:
        base = niche_seed(seed, niche_id)
        return cls(
            random.Random(stream_seed(base, SAMPLE_STREAM)),
            random.Random(stream_seed(base, MUTATE_STREAM)),
        )
