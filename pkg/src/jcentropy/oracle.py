"""Brute-force reference path on the full atom (x) field space.

Nothing here uses the closed-form evolution or the Jacobi solver: the joint
density matrix is propagated with ``exp(-iHt)`` built from a dense LAPACK
eigendecomposition of the truncated Hamiltonian and then traced.

Basis layout is atom-major: index ``row * dim + n`` with row 0 = excited,
row 1 = ground.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import Scenario, ScenarioSpec
from .exceptions import DimensionMismatch, NormalizationError, TailMassError
from .virtual_atom import clamp_spectrum, entropy_from_spectrum

HERMITIAN_TOLERANCE = 1e-10
TRACE_TOLERANCE = 1e-10
ARAKI_LIEB_SLACK = 1e-8
SCHMIDT_TOLERANCE = 1e-9


def build_hamiltonian(dim: int) -> np.ndarray:
    """Interaction Hamiltonian ``a^dagger sigma_- + a sigma_+`` (coupling 1).

    The coupling ``|e, dim-1> <-> |g, dim>`` leaves the basis and is dropped.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    h = np.zeros((2 * dim, 2 * dim), dtype=complex)
    for n in range(dim - 1):
        e_n, g_n1 = n, dim + n + 1
        h[g_n1, e_n] = h[e_n, g_n1] = math.sqrt(n + 1)
    return h


def _coherent_closed_form(alpha: complex, dim: int, tail_tolerance: float) -> np.ndarray:
    # exp(-|a|^2/2) a^n / sqrt(n!) evaluated in log space; deliberately not
    # the recurrence used by fock.coherent_state.
    n = np.arange(dim)
    if alpha == 0:
        amps = (n == 0).astype(complex)
    else:
        r, phi = abs(alpha), np.angle(alpha)
        lgam = np.array([math.lgamma(k + 1.0) for k in n])
        log_mod = -0.5 * r * r + n * math.log(r) - 0.5 * lgam
        amps = np.exp(log_mod) * np.exp(1j * phi * n)
    tail = 1.0 - math.fsum(np.abs(amps) ** 2)
    if tail > tail_tolerance:
        raise TailMassError(f"coherent state alpha={alpha} loses {tail:.3e} at dim={dim}")
    return amps


def _projector(v: np.ndarray) -> np.ndarray:
    return np.outer(v, v.conj())


def build_initial_density(spec: ScenarioSpec) -> np.ndarray:
    dim, tol = spec.effective_dim, spec.tail_tolerance
    first = np.zeros(2 * dim, dtype=complex)
    second = np.zeros(2 * dim, dtype=complex)
    a = _coherent_closed_form(spec.alpha, dim, tol)
    first[:dim] = a
    if spec.scenario is Scenario.FIELD_MIXTURE:
        second[:dim] = _coherent_closed_form(spec.beta, dim, tol)
    else:
        second[dim:] = a
    return spec.C * _projector(first) + (1.0 - spec.C) * _projector(second)


class Propagator:
    """``U(t) = V exp(-iEt) V^dagger`` from one dense eigendecomposition of ``H``."""

    def __init__(self, h: np.ndarray):
        h = np.asarray(h, dtype=complex)
        if np.max(np.abs(h - h.conj().T), initial=0.0) > HERMITIAN_TOLERANCE:
            raise ValueError("Hamiltonian is not Hermitian")
        self.energies, self.vectors = np.linalg.eigh(h)

    @property
    def size(self) -> int:
        return self.energies.size

    def unitary(self, t: float) -> np.ndarray:
        return (self.vectors * np.exp(-1j * self.energies * t)) @ self.vectors.conj().T

    def evolve(self, rho0: np.ndarray, t: float) -> np.ndarray:
        rho0 = np.asarray(rho0)
        if rho0.shape != (self.size, self.size):
            raise DimensionMismatch(f"rho0 has shape {rho0.shape}, H has size {self.size}")
        u = self.unitary(t)
        rho = u @ rho0 @ u.conj().T
        return 0.5 * (rho + rho.conj().T)


def evolve_density(rho0: np.ndarray, h: np.ndarray, t: float) -> np.ndarray:
    return Propagator(h).evolve(rho0, t)


def _split(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho)
    d = rho.shape[0]
    if rho.shape != (d, d) or d % 2:
        raise DimensionMismatch(f"joint state must be square with even size, got {rho.shape}")
    dim = d // 2
    return rho.reshape(2, dim, 2, dim)


def partial_trace_atom(rho: np.ndarray) -> np.ndarray:
    """Field state ``rho_F[m, n] = sum_a rho[(a, m), (a, n)]``."""
    return np.einsum("ambn,ab->mn", _split(rho), np.eye(2))


def partial_trace_field(rho: np.ndarray) -> np.ndarray:
    """Atomic 2x2 state, rows ordered (excited, ground)."""
    return np.einsum("anbn->ab", _split(rho))


def density_spectrum(rho: np.ndarray):
    """Clamped, renormalized spectrum of a density matrix (descending)."""
    rho = np.asarray(rho)
    trace = float(np.trace(rho).real)
    if abs(trace - 1.0) > TRACE_TOLERANCE:
        raise NormalizationError(f"density matrix trace {trace!r} deviates from 1")
    return clamp_spectrum(np.linalg.eigvalsh(rho))


def vn_entropy(rho: np.ndarray) -> float:
    """``-Tr(rho ln rho)`` in nats."""
    return entropy_from_spectrum(density_spectrum(rho))


@dataclass(frozen=True)
class ArakiLiebReport:
    S_A: float
    S_F: float
    S_AB: float
    lower_margin: float
    upper_margin: float
    passed: bool


def check_araki_lieb(S_A: float, S_F: float, S_AB: float, slack: float = ARAKI_LIEB_SLACK) -> ArakiLiebReport:
    """Margins of ``|S_A - S_F| <= S_AB <= S_A + S_F``; nonnegative means satisfied."""
    for name, value in (("S_A", S_A), ("S_F", S_F), ("S_AB", S_AB)):
        if not math.isfinite(value) or value < -1e-12:
            raise ValueError(f"{name}={value!r} is not a valid entropy")
    lower = S_AB - abs(S_A - S_F)
    upper = S_A + S_F - S_AB
    return ArakiLiebReport(S_A, S_F, S_AB, lower, upper, lower >= -slack and upper >= -slack)


@dataclass(frozen=True)
class SchmidtReport:
    max_deviation: float
    passed: bool


def check_schmidt_invariant(cs, rho_f: np.ndarray, tolerance: float = SCHMIDT_TOLERANCE) -> SchmidtReport:
    """Compare ``sum_k |psi_k><psi_k|`` with a traced field density matrix."""
    m = cs.matrix()
    rho_f = np.asarray(rho_f)
    if rho_f.shape != (m.shape[0], m.shape[0]):
        raise DimensionMismatch(f"field matrix {rho_f.shape} vs components of dim {m.shape[0]}")
    deviation = float(np.max(np.abs(m @ m.conj().T - rho_f)))
    return SchmidtReport(deviation, deviation < tolerance)


class JointOracle:
    """Evolves one scenario on the joint space, reusing a single propagator."""

    def __init__(self, spec: ScenarioSpec):
        self.spec = spec
        self.dim = spec.effective_dim
        self.rho0 = build_initial_density(spec)
        self.propagator = Propagator(build_hamiltonian(self.dim))

    def state(self, t: float) -> np.ndarray:
        return self.propagator.evolve(self.rho0, t)
