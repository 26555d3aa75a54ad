"""Grayscale image I/O: binary PGM (P5) and 8-bit PNG.

Lossless formats only; JPEG exists solely inside the attack battery.
Color inputs are reduced to 8-bit gray with the integer Rec.601 luma
Y = floor((299R + 587G + 114B + 500) / 1000), with a warning. Output files
are written atomically (temp file + rename) so a failing command never
leaves a partial file behind.
"""

from __future__ import annotations

import io
import os
import warnings
from pathlib import Path

import numpy as np
from PIL import Image

LOSSLESS_SUFFIXES = (".pgm", ".png")


def read_image(path) -> np.ndarray:
    """Load a grayscale image as a 2-D uint8 array."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such image: {path}")
    if path.suffix.lower() == ".pgm":
        return read_pgm(path)
    with Image.open(path) as im:
        if im.mode == "L":
            return np.asarray(im, dtype=np.uint8)
        if im.mode == "1":
            return np.asarray(im.convert("L"), dtype=np.uint8)
        warnings.warn(f"{path.name}: converting {im.mode} input to grayscale (Rec.601)")
        rgb = np.asarray(im.convert("RGB"), dtype=np.int64)
    return rec601_gray(rgb)


def write_image(path, image) -> None:
    """Write a 2-D uint8 array as PGM or PNG, by extension."""
    path = Path(path)
    arr = _as_image(image)
    suffix = path.suffix.lower()
    if suffix == ".pgm":
        write_pgm(path, arr)
    elif suffix == ".png":
        buf = io.BytesIO()
        Image.fromarray(arr, mode="L").save(buf, format="PNG")
        _atomic_write(path, buf.getvalue())
    else:
        raise ValueError(f"unsupported output format {suffix!r} (use .pgm or .png)")


def read_pgm(path) -> np.ndarray:
    """Parse a binary (P5) PGM with maxval <= 255."""
    data = Path(path).read_bytes()
    pos = 0

    def token():
        nonlocal pos
        while pos < len(data):
            c = data[pos : pos + 1]
            if c == b"#":
                while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            elif c.isspace():
                pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ValueError(f"{path}: truncated PGM header")
        return data[start:pos]

    if token() != b"P5":
        raise ValueError(f"{path}: not a binary PGM (P5) file")
    width = int(token())
    height = int(token())
    maxval = int(token())
    if width <= 0 or height <= 0:
        raise ValueError(f"{path}: bad PGM dimensions {width}x{height}")
    if not 0 < maxval <= 255:
        raise ValueError(f"{path}: only 8-bit PGM supported (maxval {maxval})")
    pos += 1  # single whitespace byte before the raster
    raster = data[pos : pos + width * height]
    if len(raster) != width * height:
        raise ValueError(f"{path}: PGM raster truncated")
    return np.frombuffer(raster, dtype=np.uint8).reshape(height, width).copy()


def write_pgm(path, image) -> None:
    arr = _as_image(image)
    h, w = arr.shape
    header = f"P5\n{w} {h}\n255\n".encode("ascii")
    _atomic_write(Path(path), header + arr.tobytes())


def rec601_gray(rgb: np.ndarray) -> np.ndarray:
    """Integer Rec.601 luma of an (..., 3) RGB array."""
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    return ((299 * r + 587 * g + 114 * b + 500) // 1000).astype(np.uint8)


def to_bits(image) -> np.ndarray:
    """Threshold a grayscale image into watermark bits (>= 128 -> 1)."""
    return (np.asarray(image, dtype=np.uint8) >= 128).astype(np.uint8)


def bits_to_image(bits) -> np.ndarray:
    """Render watermark bits as a bilevel 0/255 image."""
    return (np.asarray(bits, dtype=np.uint8) * 255).astype(np.uint8)


def _as_image(image) -> np.ndarray:
    arr = np.asarray(image, dtype=np.uint8)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 1-D or 2-D carrier, got {arr.ndim} dimensions")
    return arr


def _atomic_write(path: Path, blob: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(blob)
    os.replace(tmp, path)
