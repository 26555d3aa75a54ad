from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings

from camark import Prng64

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ASSETS = Path(__file__).resolve().parent.parent / "assets"


def random_image(seed: int, height: int, width: int) -> np.ndarray:
    """Deterministic uint8 test image from the package's own PRNG."""
    bits = Prng64(seed).bits(height * width * 8).reshape(-1, 8)
    values = (bits * (1 << np.arange(8, dtype=np.uint8))).sum(axis=1)
    return values.astype(np.uint8).reshape(height, width)


def random_bits(seed: int, height: int, width: int) -> np.ndarray:
    return Prng64(seed).bits(height * width).reshape(height, width)


@pytest.fixture(scope="session")
def assets_dir() -> Path:
    return ASSETS


@pytest.fixture(scope="session")
def cover256(assets_dir) -> np.ndarray:
    from camark.imgio import read_pgm

    return read_pgm(assets_dir / "cover_256.pgm")


@pytest.fixture(scope="session")
def cover64(assets_dir) -> np.ndarray:
    from camark.imgio import read_pgm

    return read_pgm(assets_dir / "cover_64.pgm")


@pytest.fixture(scope="session")
def wm32(assets_dir) -> np.ndarray:
    from camark.imgio import read_pgm, to_bits

    return to_bits(read_pgm(assets_dir / "watermark_32.pgm"))
