"""Counter-based random streams for reproducible simulation.

Every consumer of randomness in this package derives an independent
Philox stream from a user seed, a fixed domain tag, and up to three path
indices (for example task/method/case). Streams are therefore identical
regardless of evaluation order or parallelism, and stable across
platforms for a given numpy major series.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["substream", "gamma_variate"]

_U64_MASK = (1 << 64) - 1

# Domain tags reserved by the package. Test fixtures may use further tags.
DOMAIN_CASES = 1
DOMAIN_BOOTSTRAP = 2
DOMAIN_DEMO_CORPUS = 6


def substream(seed: int, domain: int, *path: int) -> np.random.Generator:
    """Independent generator for (seed, domain, path).

    The seed and domain form the Philox key; up to three path indices
    are placed in the high words of the 256-bit counter, leaving 2^64
    draws of room per stream.
    """
    if len(path) > 3:
        raise ValueError("substream supports at most three path indices")
    key = np.array([seed & _U64_MASK, domain & _U64_MASK], dtype=np.uint64)
    words = [0, 0, 0, 0]
    for i, part in enumerate(path):
        words[3 - i] = part & _U64_MASK
    counter = np.array(words, dtype=np.uint64)
    return np.random.Generator(np.random.Philox(counter=counter, key=key))


def gamma_variate(shape: float, rng: np.random.Generator) -> float:
    """One Gamma(shape, 1) draw via the Marsaglia-Tsang squeeze method.

    Shapes below 1 are boosted to shape+1 and corrected with a uniform
    power factor.
    """
    if not shape > 0.0:
        raise ValueError(f"gamma shape must be positive, got {shape}")
    if shape < 1.0:
        u = rng.random()
        return gamma_variate(shape + 1.0, rng) * u ** (1.0 / shape)
    d = shape - 1.0 / 3.0
    c = 1.0 / math.sqrt(9.0 * d)
    while True:
        x = rng.standard_normal()
        v = (1.0 + c * x) ** 3
        if v <= 0.0:
            continue
        u = rng.random()
        if math.log(u) < 0.5 * x * x + d - d * v + d * math.log(v):
            return d * v
