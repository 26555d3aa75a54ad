"""Blind bit-plane watermarking in the scrambled domain.

The payload is the watermark's bits flattened row-major and repeated as
whole copies (copy-major), written into one bit plane of the contiguous
prefix of the scrambled carrier. Unscrambling scatters that prefix across
the carrier, so damage localized in the image hits each bit's copies only
partially; extraction takes a per-bit majority vote over the copies and
needs only the key, never the original carrier.

Two embedding modes:

* ``substitute`` (default): the plane bit is replaced by the payload bit.
  Exactly invertible; a clean round-trip always recovers the watermark.
* ``or``: the plane bit is OR-ed with the payload bit. It can only set
  bits, never clear them, so it is not invertible and blind extraction is
  biased toward 1s wherever the carrier's plane already holds a 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DimensionError
from .scramble import (
    ScrambleKey,
    apply_permutation,
    invert_permutation,
    scramble_permutation,
    validate_permutation,
)

MODES = ("substitute", "or")


@dataclass(frozen=True)
class WatermarkKey:
    """Full secret needed to embed and blindly extract a watermark."""

    scramble: ScrambleKey
    wm_height: int
    wm_width: int
    bit_plane: int = 0
    repetition: int = 9
    mode: str = "substitute"

    def __post_init__(self):
        if self.wm_height < 1 or self.wm_width < 1:
            raise ValueError(
                f"watermark dimensions must be positive, got {self.wm_height}x{self.wm_width}"
            )
        if not 0 <= self.bit_plane <= 7:
            raise ValueError(f"bit_plane must be in 0..7, got {self.bit_plane}")
        if self.repetition < 1 or self.repetition % 2 == 0:
            raise ValueError(f"repetition must be odd and >= 1, got {self.repetition}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @property
    def wm_bits(self) -> int:
        return self.wm_height * self.wm_width


def embed(carrier, wm, key: WatermarkKey) -> np.ndarray:
    """Embed `wm` into `carrier` under `key`, returning a marked copy."""
    n = np.asarray(carrier).size
    return embed_with_permutation(carrier, wm, key, scramble_permutation(n, key.scramble))


def extract(carrier, key: WatermarkKey) -> np.ndarray:
    """Blindly extract the watermark bits from a (possibly attacked) carrier."""
    n = np.asarray(carrier).size
    return extract_with_permutation(carrier, key, scramble_permutation(n, key.scramble))


def embed_with_permutation(carrier, wm, key: WatermarkKey, perm) -> np.ndarray:
    """Like embed() but with a caller-supplied permutation (test hook)."""
    arr = np.asarray(carrier, dtype=np.uint8)
    flat = arr.reshape(-1)
    p = validate_permutation(perm, flat.size)
    bits = _check_wm(wm, key)
    payload = np.tile(bits.reshape(-1), key.repetition)
    footprint = payload.size
    if footprint > flat.size:
        raise CapacityError(
            f"payload of {footprint} bits exceeds carrier of {flat.size} samples"
        )
    scrambled = flat[p]
    mask = np.uint8(1 << key.bit_plane)
    plane = (payload.astype(np.uint8) << key.bit_plane).astype(np.uint8)
    if key.mode == "substitute":
        scrambled[:footprint] = (scrambled[:footprint] & ~mask) | plane
    else:
        scrambled[:footprint] |= plane
    return scrambled[invert_permutation(p)].reshape(arr.shape)


def extract_with_permutation(carrier, key: WatermarkKey, perm) -> np.ndarray:
    """Like extract() but with a caller-supplied permutation (test hook)."""
    arr = np.asarray(carrier, dtype=np.uint8)
    flat = arr.reshape(-1)
    p = validate_permutation(perm, flat.size)
    footprint = key.repetition * key.wm_bits
    if footprint > flat.size:
        raise CapacityError(
            f"payload of {footprint} bits exceeds carrier of {flat.size} samples"
        )
    votes = (flat[p[:footprint]] >> key.bit_plane) & 1
    votes = votes.reshape(key.repetition, key.wm_bits)
    # repetition is odd, so the vote can never tie
    bits = (2 * votes.sum(axis=0, dtype=np.int64) > key.repetition).astype(np.uint8)
    return bits.reshape(key.wm_height, key.wm_width)


def _check_wm(wm, key: WatermarkKey) -> np.ndarray:
    bits = np.asarray(wm)
    if bits.shape != (key.wm_height, key.wm_width):
        raise DimensionError(
            f"watermark shape {bits.shape} does not match key "
            f"({key.wm_height}, {key.wm_width})"
        )
    if bits.size and not np.isin(bits, (0, 1)).all():
        raise ValueError("watermark must contain only bits 0 and 1")
    return bits.astype(np.uint8)
