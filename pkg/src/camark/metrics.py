"""Scrambling-degree and fidelity metrics.

Gray difference of an interior pixel is the mean squared gap to its four
von Neumann neighbors:

    GD(i,j) = (1/4) * sum over (i±1,j), (i,j±1) of (P(i,j) - P(nb))**2

and E(GD) averages GD over the interior (one-pixel border excluded).
The gray-difference degree between an original and a test image is
reported both raw, E' - E, and normalized, (E' - E) / (E' + E), the
bounded form in [-1, 1] (0 when both images are perfectly flat).

All accumulation is double precision over integer pixel differences, so
large images cannot overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

PEAK = 255.0


def gray_difference_mean(image) -> float:
    """E(GD) over the interior of a 2-D image of at least 3x3 pixels."""
    p = _image(image)
    if p.shape[0] < 3 or p.shape[1] < 3:
        raise DimensionError(f"image must be at least 3x3, got {p.shape}")
    c = p[1:-1, 1:-1]
    gd = (
        (c - p[:-2, 1:-1]) ** 2
        + (c - p[2:, 1:-1]) ** 2
        + (c - p[1:-1, :-2]) ** 2
        + (c - p[1:-1, 2:]) ** 2
    ) / 4.0
    return float(gd.mean())


def gdd(original, test) -> tuple[float, float]:
    """(normalized, raw) gray-difference degree between two same-size images."""
    a = _image(original)
    b = _image(test)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch: {a.shape} vs {b.shape}")
    e_orig = gray_difference_mean(a)
    e_test = gray_difference_mean(b)
    raw = e_test - e_orig
    total = e_test + e_orig
    normalized = raw / total if total != 0.0 else 0.0
    return normalized, raw


def ber(a, b) -> float:
    """Bit error rate: fraction of positions where the bit matrices differ."""
    x, y = _bit_pair(a, b)
    return float(np.mean(x != y))


def nc(a, b) -> float:
    """Normalized correlation: fraction of a's 1-bits preserved in b."""
    x, y = _bit_pair(a, b)
    ones = int(x.sum())
    if ones == 0:
        raise ValueError("reference watermark has no 1-bits; nc undefined")
    return float(np.sum(x & y) / ones)


def psnr(a, b) -> float:
    """Peak signal-to-noise ratio in dB for 8-bit samples; inf when equal."""
    x = np.asarray(a, dtype=np.float64)
    y = np.asarray(b, dtype=np.float64)
    if x.shape != y.shape:
        raise DimensionError(f"shape mismatch: {x.shape} vs {y.shape}")
    if x.size == 0:
        raise DimensionError("psnr of empty carriers is undefined")
    mse = float(np.mean((x - y) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / mse)


def histogram(carrier) -> np.ndarray:
    """Counts of each 8-bit sample value; counts.sum() == sample count."""
    arr = np.asarray(carrier, dtype=np.uint8)
    return np.bincount(arr.reshape(-1), minlength=256)


@dataclass(frozen=True)
class EvalReport:
    """Metric bundle for one experiment cell.

    psnr_db compares the original cover against the attacked marked image;
    e_gd_test, gdd_* and histogram_equal compare the cover against its
    scrambled version; ber/nc compare embedded vs extracted watermark.
    """

    e_gd_original: float
    e_gd_test: float
    gdd_normalized: float
    gdd_raw: float
    psnr_db: float
    ber: float
    nc: float
    histogram_equal: bool

    def as_json_dict(self) -> dict:
        return {
            "e_gd_original": self.e_gd_original,
            "e_gd_test": self.e_gd_test,
            "gdd_normalized": self.gdd_normalized,
            "gdd_raw": self.gdd_raw,
            "psnr_db": self.psnr_db if math.isfinite(self.psnr_db) else "inf",
            "ber": self.ber,
            "nc": self.nc,
            "histogram_equal": self.histogram_equal,
        }


def _image(image) -> np.ndarray:
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D image, got {arr.ndim} dimensions")
    return arr


def _bit_pair(a, b):
    x = np.asarray(a).astype(bool)
    y = np.asarray(b).astype(bool)
    if x.shape != y.shape:
        raise DimensionError(f"shape mismatch: {x.shape} vs {y.shape}")
    if x.size == 0:
        raise DimensionError("empty bit matrices")
    return x, y
