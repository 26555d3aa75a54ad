"""Attack battery for robustness testing.

Every attack preserves the image dimensions and 8-bit range, so blind
extraction needs no resynchronization. Stochastic attacks are pure
functions of (image, parameter, seed); the Prng64 stream layout per attack
is pinned below so results are reproducible bit-for-bit.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image

from .ca import Prng64
from .errors import AttackError, DimensionError

KINDS = ("noise", "crop", "jpeg")


@dataclass(frozen=True)
class AttackSpec:
    """One attack cell: kind, strength parameter, PRNG seed."""

    kind: str
    param: float
    seed: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind in ("noise", "crop"):
            if not 0.0 <= float(self.param) <= 1.0:
                raise ValueError(f"{self.kind} parameter must be in 0..1, got {self.param}")
        else:
            _check_quality(self.param)

    def apply(self, image) -> np.ndarray:
        if self.kind == "noise":
            return salt_pepper(image, float(self.param), self.seed)
        if self.kind == "crop":
            return crop_delete(image, float(self.param), self.seed)
        return jpeg_roundtrip(image, int(self.param))


def salt_pepper(image, density: float, seed: int) -> np.ndarray:
    """Replace each pixel independently with probability `density` by 0 or 255.

    Stream layout: one decision word per pixel (replace when word <
    density * 2**64), then one further bit per replaced pixel, drawn in
    ascending pixel order (1 -> 255, 0 -> 0). Untouched pixels are copied
    bit-identically.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must be in 0..1, got {density}")
    img = _require_image(image)
    out = img.copy()
    n = img.size
    if density == 0.0 or n == 0:
        return out
    prng = Prng64(seed)
    if density >= 1.0:
        mask = np.ones(n, dtype=bool)
        prng.words(n)  # keep the stream layout identical to the general case
    else:
        threshold = int(density * 2.0**64)
        mask = prng.words(n) < np.uint64(threshold)
    hit = int(mask.sum())
    if hit:
        values = np.where(prng.bits(hit) == 1, 255, 0).astype(np.uint8)
        out.reshape(-1)[mask] = values
    return out


def crop_delete(image, fraction: float, seed: int) -> np.ndarray:
    """Zero-fill one random axis-aligned rectangle of about `fraction` area.

    The rectangle's height is drawn uniformly from the range that keeps the
    width within the image, the width follows from the area target, and the
    position is uniform over valid placements. Dimensions are unchanged.
    """
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"fraction must be in 0..1, got {fraction}")
    img = _require_image(image)
    out = img.copy()
    h, w = img.shape
    target = round(fraction * h * w)
    if target == 0 or h == 0 or w == 0:
        return out
    prng = Prng64(seed)
    lo = -(-target // w)  # ceil
    hi = min(h, target)
    rh = lo + prng.below(hi - lo + 1)
    rw = min(w, round(target / rh))
    if rw == 0:
        return out
    top = prng.below(h - rh + 1)
    left = prng.below(w - rw + 1)
    out[top : top + rh, left : left + rw] = 0
    return out


def jpeg_roundtrip(image, quality: int) -> np.ndarray:
    """Encode as baseline grayscale JPEG at `quality` and decode back."""
    _check_quality(quality)
    img = _require_image(image)
    try:
        buf = io.BytesIO()
        Image.fromarray(img, mode="L").save(buf, format="JPEG", quality=int(quality))
        buf.seek(0)
        decoded = Image.open(buf)
        out = np.asarray(decoded.convert("L"), dtype=np.uint8)
    except (OSError, ValueError) as exc:
        raise AttackError(f"jpeg round-trip failed: {exc}") from exc
    if out.shape != img.shape:
        raise AttackError(f"codec changed dimensions: {img.shape} -> {out.shape}")
    return out


def _require_image(image) -> np.ndarray:
    arr = np.asarray(image, dtype=np.uint8)
    if arr.ndim != 2:
        raise DimensionError(f"attacks need a 2-D image, got {arr.ndim} dimensions")
    return arr


def _check_quality(quality):
    if isinstance(quality, bool) or not float(quality).is_integer():
        raise ValueError(f"jpeg quality must be an integer, got {quality!r}")
    if not 1 <= int(quality) <= 100:
        raise ValueError(f"jpeg quality must be in 1..100, got {quality}")
