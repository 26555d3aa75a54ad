"""Reference methods for the comparison harness.

Both baselines share the payload layout and capacity accounting of the CA
method, so benchmark comparisons are apples-to-apples: a seeded uniform
shuffle replaces the CA permutation, and direct LSB embedding uses no
permutation at all.
"""

from __future__ import annotations

import numpy as np

from .ca import Prng64
from .scramble import ScrambleKey
from .watermark import WatermarkKey, embed_with_permutation


def fisher_yates_permutation(length: int, seed: int) -> np.ndarray:
    """Uniform random permutation of 0..length-1, deterministic per seed.

    Index draws use modulo rejection so every permutation is equally likely.
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    perm = np.arange(length, dtype=np.int64)
    prng = Prng64(seed)
    for i in range(length - 1, 0, -1):
        j = prng.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def lsb_embed_direct(carrier, wm, repetition: int = 9, bit_plane: int = 0) -> np.ndarray:
    """Plain bit-plane substitution at the carrier prefix (no scrambling)."""
    bits = np.asarray(wm)
    key = WatermarkKey(
        scramble=ScrambleKey(seed=0),
        wm_height=bits.shape[0],
        wm_width=bits.shape[1],
        bit_plane=bit_plane,
        repetition=repetition,
        mode="substitute",
    )
    n = np.asarray(carrier).size
    return embed_with_permutation(carrier, bits, key, np.arange(n, dtype=np.int64))
