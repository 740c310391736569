"""Input validation helpers shared across the package."""

from __future__ import annotations

from typing import Iterable

UNIFORM = "uniform"
FREQUENCY = "frequency"
WEIGHTINGS = (UNIFORM, FREQUENCY)


def check_strings(strings: Iterable[str]) -> tuple[str, ...]:
    """Normalize a string collection to a tuple and validate it.

    At least one string is required; individual strings may be empty.
    Comparison is by exact code point and case-sensitive throughout.
    """
    if isinstance(strings, str):
        raise TypeError("expected a collection of strings, got a single str")
    out = tuple(strings)
    if not out:
        raise ValueError("need at least one string")
    for i, s in enumerate(out):
        if not isinstance(s, str):
            raise TypeError(f"string #{i} is {type(s).__name__}, expected str")
    return out


def check_weighting(weighting: str) -> str:
    if weighting not in WEIGHTINGS:
        raise ValueError(f"weighting must be one of {WEIGHTINGS}, got {weighting!r}")
    return weighting


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise TypeError(f"seed must be an int, got {type(seed).__name__}")
    if seed < 0:
        raise ValueError(f"seed must be non-negative, got {seed}")
    return seed


def check_count(value: int, name: str, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def check_unit_open(value: float, name: str) -> float:
    """Validate a probability strictly inside (0, 1)."""
    value = float(value)
    if not 0.0 < value < 1.0:
        raise ValueError(f"{name} must lie strictly between 0 and 1, got {value}")
    return value
