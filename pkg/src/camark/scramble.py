"""Keyed scrambling permutations harvested from an evolving automaton.

The generator evolves a seeded binary state and collects carrier indices
in the order the automaton lights them up: one synchronous CA step per
generation, then a full left-to-right scan assigning every position whose
cell is 1 and not yet taken. (The update is per-generation, and the
generation-0 state itself is never scanned.) Whatever is still unassigned
when the generation budget runs out is appended in ascending order, so the
output is always a total bijection on 0..N-1.

Convention: scrambled[k] = original[perm[k]] (a gather). Indices are
0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ca import ca_step, rule_table, seed_state
from .errors import DimensionError

DEFAULT_RULE = 7
DEFAULT_GENERATIONS = 20

_U64_MAX = (1 << 64) - 1


@dataclass(frozen=True)
class ScrambleKey:
    """Secret parameters of the scrambling permutation."""

    seed: int
    rule: int = DEFAULT_RULE
    generations: int = DEFAULT_GENERATIONS

    def __post_init__(self):
        if not 0 <= self.seed <= _U64_MAX:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        rule_table(self.rule)
        if self.generations < 1:
            raise ValueError(f"generations must be >= 1, got {self.generations}")


def scramble_from_initial(initial, rule: int, generations: int) -> np.ndarray:
    """Run the harvesting loop from a caller-supplied initial state.

    Exposed so the loop can be exercised without the PRNG;
    scramble_permutation(n, key) == scramble_from_initial(
    seed_state(key.seed, n), key.rule, key.generations).
    """
    order, _ = _harvest(initial, rule, generations)
    return order


def scramble_permutation(length: int, key: ScrambleKey) -> np.ndarray:
    """Generate the keyed permutation of 0..length-1."""
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    return scramble_from_initial(seed_state(key.seed, length), key.rule, key.generations)


def coverage_by_generation(initial, rule: int, generations: int) -> np.ndarray:
    """Indices newly assigned per generation (diagnostic for budget tuning)."""
    _, counts = _harvest(initial, rule, generations)
    return counts


def _harvest(initial, rule: int, generations: int):
    table = rule_table(rule)
    if generations < 1:
        raise ValueError(f"generations must be >= 1, got {generations}")
    state = np.asarray(initial, dtype=np.uint8)
    n = state.size
    order = np.empty(n, dtype=np.int64)
    assigned = 0
    available = np.ones(n, dtype=bool)
    counts = np.zeros(generations, dtype=np.int64)
    for gen in range(generations):
        if n == 0:
            break
        state = ca_step(state, table)
        hits = np.flatnonzero((state == 1) & available)
        if hits.size:
            order[assigned : assigned + hits.size] = hits
            available[hits] = False
            assigned += hits.size
            counts[gen] = hits.size
            if assigned == n:
                break
        elif np.array_equal(ca_step(state, table), state):
            # fixed point with nothing new: later scans provably assign nothing
            break
    if assigned < n:
        order[assigned:] = np.flatnonzero(available)
    return order, counts


def invert_permutation(perm) -> np.ndarray:
    """Inverse bijection: invert(p)[p[k]] = k."""
    p = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size, dtype=np.int64)
    return inv


def apply_permutation(carrier, perm) -> np.ndarray:
    """Gather carrier samples through `perm`, preserving the carrier's shape.

    The carrier may be a 1-D sample stream or a 2-D image (row-major).
    """
    arr = np.asarray(carrier)
    p = np.asarray(perm, dtype=np.int64)
    if p.size != arr.size:
        raise DimensionError(
            f"permutation length {p.size} does not match carrier size {arr.size}"
        )
    return arr.reshape(-1)[p].reshape(arr.shape)


def validate_permutation(perm, length: int) -> np.ndarray:
    """Check that `perm` is a bijection on 0..length-1 and return it as int64."""
    p = np.asarray(perm, dtype=np.int64)
    if p.size != length:
        raise DimensionError(f"permutation length {p.size} does not match {length}")
    if p.size and (p.min() < 0 or p.max() >= length or np.unique(p).size != length):
        raise ValueError("not a bijection on 0..length-1")
    return p
