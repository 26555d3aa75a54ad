"""One-dimensional elementary cellular automata plus the keyed bit stream.

Rules follow Wolfram numbering: rule r maps the 3-cell neighborhood value
k = 4*left + 2*center + right to bit k of r. The lattice is periodic, so
every cell always has a full neighborhood; a lone cell (N = 1) is its own
left and right neighbor.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidRuleError

_U64_MASK = (1 << 64) - 1
_XORSHIFT_MULT = 0x2545F4914F6CDD1D
_ZERO_SEED_REMAP = 0x9E3779B97F4A7C15


class Prng64:
    """Deterministic xorshift64* stream.

    The recipe is pinned so keys port bit-exactly between implementations:

        state ^= state >> 12
        state ^= state << 25   (mod 2**64)
        state ^= state >> 27
        output = state * 0x2545F4914F6CDD1D   (mod 2**64)

    Seed 0 is remapped to 0x9E3779B97F4A7C15; the all-zero state is a
    fixed point of the xorshift orbit and would emit only zeros.
    Instances are single-owner: never share one across concurrent callers.
    """

    def __init__(self, seed: int):
        if not 0 <= seed <= _U64_MASK:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        self.state = seed if seed != 0 else _ZERO_SEED_REMAP

    def next_word(self) -> int:
        s = self.state
        s ^= s >> 12
        s = (s ^ (s << 25)) & _U64_MASK
        s ^= s >> 27
        self.state = s
        return (s * _XORSHIFT_MULT) & _U64_MASK

    def words(self, count: int) -> np.ndarray:
        """Next `count` output words as a uint64 array."""
        return np.array([self.next_word() for _ in range(count)], dtype=np.uint64)

    def bits(self, count: int) -> np.ndarray:
        """Next `count` bits, MSB-first within each 64-bit output word."""
        if count == 0:
            return np.zeros(0, dtype=np.uint8)
        nwords = (count + 63) // 64
        raw = self.words(nwords).astype(">u8").view(np.uint8)
        return np.unpackbits(raw)[:count]

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via modulo rejection (unbiased)."""
        if n <= 0:
            raise ValueError(f"upper bound must be positive, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            w = self.next_word()
            if w < limit:
                return w % n


def rule_table(rule: int) -> np.ndarray:
    """Expand a Wolfram rule number into its 8-entry output table.

    Entry k is the new cell value for neighborhood value k, i.e. bit k of
    the rule's binary expansion (rule 7 = 00000111 fires on 000, 001, 010).
    """
    if isinstance(rule, bool) or not isinstance(rule, (int, np.integer)):
        raise InvalidRuleError(f"rule must be an integer, got {rule!r}")
    if not 0 <= rule <= 255:
        raise InvalidRuleError(f"rule must be in 0..255, got {rule}")
    return np.array([(rule >> k) & 1 for k in range(8)], dtype=np.uint8)


def ca_step(state: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Advance a binary state one synchronous step under `table`.

    Periodic boundary; output length equals input length. The empty state
    steps to the empty state.
    """
    s = np.asarray(state, dtype=np.uint8)
    n = s.size
    if n == 0:
        return s.copy()
    padded = np.empty(n + 2, dtype=np.uint8)
    padded[1:-1] = s
    padded[0] = s[-1]
    padded[-1] = s[0]
    idx = (padded[:-2] << 2) | (padded[1:-1] << 1) | padded[2:]
    return table[idx]


def seed_state(seed: int, length: int) -> np.ndarray:
    """Deterministic initial CA state of `length` cells for a 64-bit seed.

    Bits are drawn from the Prng64 word stream MSB-first, 64 per word, so
    the same (seed, length) always yields the same state on any platform.
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    return Prng64(seed).bits(length)
