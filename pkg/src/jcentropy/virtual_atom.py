"""Entropy of a mixed field state through its virtual-atom purification.

The reduced field state is ``rho_F = sum_k |psi_k><psi_k|``. Attaching one
orthonormal level of an auxiliary ("virtual") atom to every component gives
a pure joint state whose atomic density matrix is the Gram matrix
``P[i, j] = <psi_i|psi_j>``. Its nonzero spectrum equals that of ``rho_F``,
so the field entropy follows from an ``n x n`` eigenproblem instead of one
over the whole truncated Fock space.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .dynamics import EXCITED, GROUND, ComponentSet
from .exceptions import NegativeEigenvalueError, NonHermitianError, NormalizationError
from .linalg import hermitian_eigvalsh

TRACE_TOLERANCE = 1e-8
HERMITIAN_TOLERANCE = 1e-10
CLAMP_TOLERANCE = 1e-8
_ZERO_LOG = 1e-300


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Hermitian matrix of component overlaps.

    ``asymmetry`` is ``max |P - P^dagger|`` measured before symmetrization.
    """

    entries: np.ndarray
    asymmetry: float = 0.0

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def __array__(self, dtype=None, copy=None):
        return np.array(self.entries, dtype=dtype)


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: np.ndarray
    clamp_delta: float = 0.0
    raw_sum: float = 1.0

    def __len__(self):
        return len(self.eigenvalues)


def _symmetrize(p: np.ndarray) -> Tuple[np.ndarray, float]:
    asym = float(np.max(np.abs(p - p.conj().T))) if p.size else 0.0
    return 0.5 * (p + p.conj().T), asym


def gram_matrix(cs: ComponentSet, check_trace: bool = True) -> GramMatrix:
    """``P[i, j] = <psi_i|psi_j>`` for the components of ``cs``."""
    m = cs.matrix()
    p, asym = _symmetrize(m.conj().T @ m)
    gram = GramMatrix(p, asym)
    if check_trace and abs(gram.trace - 1.0) > TRACE_TOLERANCE:
        raise NormalizationError(f"Gram trace {gram.trace!r} deviates from 1")
    return gram


def clamp_spectrum(values, tolerance: float = CLAMP_TOLERANCE) -> SpectrumResult:
    """Clamp roundoff-negative eigenvalues to zero and renormalize to unit sum.

    Anything below ``-tolerance`` is treated as real damage, not roundoff.
    """
    values = np.sort(np.asarray(values, dtype=float))[::-1]
    if values.size and values[-1] < -tolerance:
        raise NegativeEigenvalueError(
            f"eigenvalue {values[-1]:.3e} < -{tolerance:g}; the truncation is probably too small"
        )
    raw_sum = math.fsum(values)
    clamped = np.clip(values, 0.0, 1.0)
    delta = float(np.sum(np.abs(clamped - values)))
    total = math.fsum(clamped)
    if total > 0.0:
        clamped = clamped / total
    return SpectrumResult(clamped, delta, raw_sum)


def hermitian_eigenvalues(p) -> SpectrumResult:
    """Descending, clamped and renormalized spectrum of a Gram matrix."""
    if isinstance(p, GramMatrix):
        entries = p.entries
    else:
        entries = np.asarray(p, dtype=complex)
        entries, asym = _symmetrize(entries)
        if asym > HERMITIAN_TOLERANCE:
            raise NonHermitianError(f"matrix deviates from Hermitian by {asym:.3e}")
    return clamp_spectrum(hermitian_eigvalsh(entries))


def entropy_from_spectrum(spectrum) -> float:
    """``-sum(l * ln l)`` in nats, taking ``0 ln 0 = 0``."""
    values = spectrum.eigenvalues if isinstance(spectrum, SpectrumResult) else spectrum
    return 0.0 - math.fsum(x * math.log(x) for x in np.asarray(values, dtype=float) if x > _ZERO_LOG)


def purity(p) -> float:
    """Purity parameter ``1 - Tr(rho^2) = 1 - sum_ij |P_ij|^2``."""
    entries = np.asarray(p.entries if isinstance(p, GramMatrix) else p)
    return max(0.0, 1.0 - math.fsum((np.abs(entries) ** 2).ravel()))


def atomic_state(cs: ComponentSet, gram: GramMatrix | None = None) -> np.ndarray:
    """Reduced 2x2 state of the real atom, rows ordered (excited, ground).

    Branch ``j`` of the mixture is ``|psi_e[j]>|e> + |psi_g[j]>|g>`` where
    ``psi_e``/``psi_g`` are read from ``cs.row_map``; the coherence is
    ``rho_A[g, e] = sum_j <psi_e[j]|psi_g[j]>``.
    """
    p = (gram if gram is not None else gram_matrix(cs, check_trace=False)).entries
    rows = cs.row_map
    rho = np.empty((2, 2), dtype=complex)
    for a in (EXCITED, GROUND):
        for b in (EXCITED, GROUND):
            rho[a, b] = sum(p[kb, ka] for ka, kb in zip(rows[a], rows[b]))
    trace = rho[0, 0].real + rho[1, 1].real
    if abs(trace - 1.0) > TRACE_TOLERANCE:
        raise NormalizationError(f"atomic trace {trace!r} deviates from 1")
    return rho


def atomic_eigenvalues(rho_a) -> Tuple[float, float]:
    """``lambda_+-`` of a unit-trace 2x2 Hermitian matrix."""
    rho_a = np.asarray(rho_a)
    z = (rho_a[0, 0] - rho_a[1, 1]).real
    r = math.sqrt(z * z + 4.0 * abs(rho_a[1, 0]) ** 2)
    lam_plus = min(max(0.5 + 0.5 * r, 0.0), 1.0)
    lam_minus = min(max(0.5 - 0.5 * r, 0.0), 1.0)
    return lam_plus, lam_minus


def atomic_entropy(rho_a) -> float:
    return entropy_from_spectrum(np.array(atomic_eigenvalues(rho_a)))


def field_entropy(cs: ComponentSet) -> float:
    """Shortcut: entropy of ``sum_k |psi_k><psi_k|`` via the Gram spectrum."""
    return entropy_from_spectrum(hermitian_eigenvalues(gram_matrix(cs)))
