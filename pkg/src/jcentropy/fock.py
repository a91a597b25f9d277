"""Vectors over a truncated single-mode Fock basis.

Amplitudes are indexed by photon number ``n = 0 .. dim-1``. Vectors are
allowed to be unnormalized; nothing here rescales them.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .exceptions import DimensionMismatch, TailMassError

TAIL_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class FockVector:
    """Immutable complex amplitude array over ``|0>, ..., |dim-1>``."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).ravel()
        if amps.size < 1:
            raise ValueError("FockVector needs dim >= 1")
        if not np.all(np.isfinite(amps)):
            raise ValueError("FockVector amplitudes must be finite")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm2(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.amplitudes, dtype=dtype)

    def __mul__(self, scalar) -> "FockVector":
        return FockVector(self.amplitudes * complex(scalar))

    __rmul__ = __mul__

    def __add__(self, other: "FockVector") -> "FockVector":
        _check_dims(self, other)
        return FockVector(self.amplitudes + other.amplitudes)

    def __repr__(self):
        return f"FockVector(dim={self.dim}, norm2={self.norm2():.6g})"

    @classmethod
    def zeros(cls, dim: int) -> "FockVector":
        return cls(np.zeros(dim, dtype=complex))

    @classmethod
    def number_state(cls, n: int, dim: int) -> "FockVector":
        if not 0 <= n < dim:
            raise ValueError(f"|{n}> is outside a basis of dim {dim}")
        amps = np.zeros(dim, dtype=complex)
        amps[n] = 1.0
        return cls(amps)


def _check_dims(a: FockVector, b: FockVector):
    if a.dim != b.dim:
        raise DimensionMismatch(f"dim {a.dim} != dim {b.dim}")


def _as_complex(z) -> complex:
    z = complex(z)
    if not cmath.isfinite(z):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


def auto_dim(*alphas) -> int:
    """Default truncation covering the Poisson tail of the largest ``|alpha|^2``."""
    mean = max((abs(complex(a)) ** 2 for a in alphas), default=0.0)
    return int(math.ceil(mean + 10.0 * math.sqrt(mean) + 20.0))


def coherent_state(alpha, dim: int, tail_tolerance: float = TAIL_TOLERANCE) -> FockVector:
    """Truncated coherent state ``|alpha>``.

    Amplitudes come from the recurrence ``c[n+1] = c[n] * alpha / sqrt(n+1)``
    starting at ``c[0] = exp(-|alpha|^2 / 2)``, so no factorial is formed.

    Raises
    ------
    TailMassError
        If the probability outside the basis exceeds ``tail_tolerance``.
    """
    alpha = _as_complex(alpha)
    if dim < 1:
        raise ValueError("dim must be >= 1")
    amps = np.empty(dim, dtype=complex)
    amps[0] = math.exp(-0.5 * abs(alpha) ** 2)
    for n in range(dim - 1):
        amps[n + 1] = amps[n] * alpha / math.sqrt(n + 1)
    tail = 1.0 - math.fsum(np.abs(amps) ** 2)
    if tail > tail_tolerance:
        raise TailMassError(
            f"coherent state alpha={alpha} loses {tail:.3e} of its norm at dim={dim}; "
            f"increase dim (suggested >= {auto_dim(alpha)})"
        )
    return FockVector(amps)


def inner_product(a: FockVector, b: FockVector) -> complex:
    """``<a|b>``, antilinear in the first argument."""
    _check_dims(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def apply_diag_fn(f: Callable[[np.ndarray], np.ndarray], v: FockVector) -> FockVector:
    """Apply the operator ``f(n_hat)``, which is diagonal in the Fock basis.

    ``f`` receives the integer array ``0 .. dim-1`` and must return one real
    value per photon number (scalars broadcast).
    """
    n = np.arange(v.dim)
    values = np.broadcast_to(np.asarray(f(n), dtype=float), n.shape)
    if not np.all(np.isfinite(values)):
        raise ValueError("diagonal function returned non-finite values")
    return FockVector(values * v.amplitudes)


def apply_lower(v: FockVector) -> FockVector:
    """London phase operator ``V|n> = |n-1>``, with ``V|0> = 0``."""
    out = np.zeros(v.dim, dtype=complex)
    out[:-1] = v.amplitudes[1:]
    return FockVector(out)


def apply_raise(v: FockVector, tail_tolerance: float = TAIL_TOLERANCE) -> FockVector:
    """Adjoint phase operator ``V^dagger |n> = |n+1>``.

    The top amplitude has nowhere to go inside the truncation, so it must be
    negligible.
    """
    top = abs(v.amplitudes[-1]) ** 2
    if top > tail_tolerance:
        raise TailMassError(
            f"raising would push {top:.3e} of probability past n={v.dim - 1}; increase dim"
        )
    out = np.zeros(v.dim, dtype=complex)
    out[1:] = v.amplitudes[:-1]
    return FockVector(out)
