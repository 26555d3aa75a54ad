#!/usr/bin/env python3
"""Regenerate the bundled test images under assets/.

Everything is derived from the package's own Prng64 stream, so the files
are reproducible byte-for-byte on any platform. The covers are synthetic
"natural" images: smooth bilinear terrain plus low-frequency waves and a
little fine grain, giving the spatial correlation real photographs have
(low E(GD) before scrambling, high after).
"""

from pathlib import Path

import numpy as np

from camark import Prng64
from camark.imgio import write_pgm

ASSETS = Path(__file__).resolve().parent.parent / "assets"


def prng_floats(prng: Prng64, n: int) -> np.ndarray:
    return prng.words(n).astype(np.float64) / 2.0**64


def bilinear_terrain(prng: Prng64, size: int, spacing: int) -> np.ndarray:
    nodes = size // spacing + 1
    grid = prng_floats(prng, nodes * nodes).reshape(nodes, nodes) * 255.0
    coords = np.arange(size) / spacing
    i0 = np.minimum(coords.astype(int), nodes - 2)
    frac = coords - i0
    rows = grid[i0] * (1 - frac)[:, None] + grid[i0 + 1] * frac[:, None]
    cols = rows[:, i0] * (1 - frac)[None, :] + rows[:, i0 + 1] * frac[None, :]
    return cols


def natural_cover(seed: int, size: int) -> np.ndarray:
    prng = Prng64(seed)
    img = bilinear_terrain(prng, size, 16)
    y, x = np.indices((size, size), dtype=np.float64)
    img += 28.0 * np.sin(2 * np.pi * x / 73.0 + 1.1) + 22.0 * np.cos(2 * np.pi * y / 101.0)
    grain = prng_floats(prng, size * size).reshape(size, size) * 12.0 - 6.0
    img += grain
    img -= img.min()
    img *= 255.0 / img.max()
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def watermark_glyph(size: int = 32) -> np.ndarray:
    bits = np.zeros((size, size), dtype=np.uint8)
    # letter C
    bits[5:9, 3:14] = 1
    bits[24:28, 3:14] = 1
    bits[5:28, 3:7] = 1
    # letter A
    bits[5:28, 18:22] = 1
    bits[5:28, 25:29] = 1
    bits[5:9, 18:29] = 1
    bits[15:18, 18:29] = 1
    return bits


def main() -> None:
    ASSETS.mkdir(exist_ok=True)
    write_pgm(ASSETS / "cover_256.pgm", natural_cover(seed=61, size=256))
    write_pgm(ASSETS / "cover_64.pgm", natural_cover(seed=62, size=64))
    write_pgm(ASSETS / "watermark_32.pgm", watermark_glyph() * 255)
    print(f"wrote assets to {ASSETS}")


if __name__ == "__main__":
    main()
