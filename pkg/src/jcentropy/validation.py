"""Input checks shared by the estimator and the CLI."""
from __future__ import annotations

import cmath
import numbers

import numpy as np

from .dynamics import Scenario


def check_times(X) -> np.ndarray:
    """Accept a scalar, a 1-D array, or an ``(n, 1)`` column of times.

    Returns a 1-D float array.
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    elif arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single time column, got shape {arr.shape}")
        arr = arr[:, 0]
    elif arr.ndim != 1:
        raise ValueError(f"expected 1-D times, got {arr.ndim}-D input")
    if not np.all(np.isfinite(arr)):
        raise ValueError("times must be finite")
    return arr


def check_complex(value, name: str) -> complex:
    if isinstance(value, str):
        value = parse_complex(value)
    if not isinstance(value, numbers.Number):
        raise TypeError(f"{name} must be a number, got {type(value).__name__}")
    z = complex(value)
    if not cmath.isfinite(z):
        raise ValueError(f"{name} must be finite, got {z}")
    return z


def parse_complex(text: str) -> complex:
    """Parse ``"re,im"`` (or a bare real ``"re"``) into a complex number."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) == 1:
        parts.append("0")
    if len(parts) != 2 or not all(parts):
        raise ValueError(f"expected 're,im', got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def check_weight(C) -> float:
    C = float(C)
    if not 0.0 <= C <= 1.0:
        raise ValueError(f"C must lie in [0, 1], got {C}")
    return C


def check_dim(dim) -> int:
    if isinstance(dim, bool) or not isinstance(dim, numbers.Integral) or dim < 0:
        raise ValueError(f"dim must be a non-negative integer, got {dim!r}")
    return int(dim)


def check_scenario(scenario) -> Scenario:
    try:
        return Scenario(scenario)
    except ValueError:
        choices = ", ".join(s.value for s in Scenario)
        raise ValueError(f"unknown scenario {scenario!r}; choose one of {choices}") from None
