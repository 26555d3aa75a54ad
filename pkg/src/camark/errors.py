"""Shared exception types.

Validation failures subclass ValueError so callers (and the CLI) can treat
them uniformly as bad-input errors; AttackError marks a runtime failure
inside an attack (e.g. the JPEG codec), not bad arguments.
"""


class InvalidRuleError(ValueError):
    """Cellular automaton rule number outside 0..255."""


class DimensionError(ValueError):
    """Shapes or lengths of the operands do not line up."""


class CapacityError(ValueError):
    """Carrier too small for the requested payload footprint."""


class KeyFormatError(ValueError):
    """Key or config document is malformed or carries unknown fields."""


class AttackError(RuntimeError):
    """An attack failed to execute (codec error etc.)."""
