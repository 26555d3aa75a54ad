"""Keyed image scrambling and blind watermarking with 1-D cellular automata.

A carrier (grayscale image or raw byte stream) is permuted by harvesting
indices from an evolving elementary cellular automaton, a binary watermark
is written into one bit plane of the scrambled prefix with repetition, and
extraction recovers it blindly from the key alone, surviving noise, crop,
and JPEG attacks to a measurable degree.
"""

from .attacks import AttackSpec, crop_delete, jpeg_roundtrip, salt_pepper
from .baselines import fisher_yates_permutation, lsb_embed_direct
from .ca import Prng64, ca_step, rule_table, seed_state
from .errors import (
    AttackError,
    CapacityError,
    DimensionError,
    InvalidRuleError,
    KeyFormatError,
)
from .metrics import EvalReport, ber, gdd, gray_difference_mean, histogram, nc, psnr
from .scramble import (
    ScrambleKey,
    apply_permutation,
    coverage_by_generation,
    invert_permutation,
    scramble_from_initial,
    scramble_permutation,
)
from .watermark import (
    WatermarkKey,
    embed,
    embed_with_permutation,
    extract,
    extract_with_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "AttackError",
    "AttackSpec",
    "CapacityError",
    "DimensionError",
    "EvalReport",
    "InvalidRuleError",
    "KeyFormatError",
    "Prng64",
    "ScrambleKey",
    "WatermarkKey",
    "apply_permutation",
    "ber",
    "ca_step",
    "coverage_by_generation",
    "crop_delete",
    "embed",
    "embed_with_permutation",
    "extract",
    "extract_with_permutation",
    "fisher_yates_permutation",
    "gdd",
    "gray_difference_mean",
    "histogram",
    "invert_permutation",
    "jpeg_roundtrip",
    "lsb_embed_direct",
    "nc",
    "psnr",
    "rule_table",
    "salt_pepper",
    "scramble_from_initial",
    "scramble_permutation",
    "seed_state",
]
