"""Closed-form Jaynes-Cummings evolution of the field components.

The joint state at time ``t`` is written as a mixture of pure branches, each
``|psi_e>|e> + |psi_g>|g>``. The four unnormalized field vectors are
returned in the order used throughout the package: the two excited-row
components first, then the two ground-row components, so that branch ``j``
pairs component ``j`` with component ``j + 2``.

Time is the dimensionless product ``lambda * t``; the coupling is fixed to 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .fock import (
    TAIL_TOLERANCE,
    FockVector,
    apply_diag_fn,
    apply_lower,
    apply_raise,
    auto_dim,
    coherent_state,
)

# Atomic rows: index 0 is the excited state, index 1 the ground state.
EXCITED, GROUND = 0, 1
ROW_MAP: Tuple[Tuple[int, ...], Tuple[int, ...]] = ((0, 1), (2, 3))


class Scenario(str, enum.Enum):
    FIELD_MIXTURE = "field-mixture"
    ATOM_MIXTURE = "atom-mixture"


@dataclass(frozen=True)
class ScenarioSpec:
    """Initial condition plus truncation.

    FIELD_MIXTURE: ``(C|alpha><alpha| + (1-C)|beta><beta|) (x) |e><e|``.
    ATOM_MIXTURE: ``(C|e><e| + (1-C)|g><g|) (x) |alpha><alpha|``; ``beta`` unused.
    ``dim = 0`` picks :func:`~jcentropy.fock.auto_dim`.
    """

    scenario: Scenario = Scenario.FIELD_MIXTURE
    alpha: complex = 4.0
    beta: complex = -4.0
    C: float = 0.5
    dim: int = 0
    tail_tolerance: float = TAIL_TOLERANCE

    def __post_init__(self):
        object.__setattr__(self, "scenario", Scenario(self.scenario))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if not (0.0 <= self.C <= 1.0):
            raise ValueError(f"C must lie in [0, 1], got {self.C}")
        if self.dim < 0:
            raise ValueError("dim must be >= 0 (0 selects it automatically)")

    @property
    def amplitudes(self) -> Tuple[complex, ...]:
        if self.scenario is Scenario.FIELD_MIXTURE:
            return (self.alpha, self.beta)
        return (self.alpha,)

    @property
    def effective_dim(self) -> int:
        return self.dim or auto_dim(*self.amplitudes)


@dataclass(frozen=True, eq=False)
class ComponentSet:
    components: Tuple[FockVector, ...]
    time: float
    scenario: Scenario
    row_map: Tuple[Tuple[int, ...], ...] = ROW_MAP

    def __post_init__(self):
        dims = {c.dim for c in self.components}
        if len(dims) != 1:
            raise ValueError(f"components have mixed dims {sorted(dims)}")

    @property
    def dim(self) -> int:
        return self.components[0].dim

    def __len__(self):
        return len(self.components)

    def __getitem__(self, k) -> FockVector:
        return self.components[k]

    def total_norm2(self) -> float:
        return math.fsum(c.norm2() for c in self.components)

    def matrix(self) -> np.ndarray:
        """Components stacked as columns, shape ``(dim, n)``."""
        return np.column_stack([c.amplitudes for c in self.components])


def _cos_np1(t):
    return lambda n: np.cos(t * np.sqrt(n + 1.0))


def _sin_np1(t):
    return lambda n: np.sin(t * np.sqrt(n + 1.0))


def _cos_n(t):
    return lambda n: np.cos(t * np.sqrt(n))


def _sin_n(t):
    return lambda n: np.sin(t * np.sqrt(n))


def _check(spec: ScenarioSpec, scenario: Scenario, t: float):
    if spec.scenario is not scenario:
        raise ValueError(f"expected a {scenario.value} spec, got {spec.scenario.value}")
    if not math.isfinite(t):
        raise ValueError("t must be finite")


def evolve_field_mixture(spec: ScenarioSpec, t: float) -> ComponentSet:
    """Field in a mixture of two coherent states, atom excited."""
    _check(spec, Scenario.FIELD_MIXTURE, t)
    dim, tol = spec.effective_dim, spec.tail_tolerance
    a = coherent_state(spec.alpha, dim, tol)
    b = coherent_state(spec.beta, dim, tol)
    wa, wb = math.sqrt(spec.C), math.sqrt(1.0 - spec.C)
    cos, sin = _cos_np1(t), _sin_np1(t)
    psi1 = wa * apply_diag_fn(cos, a)
    psi2 = wb * apply_diag_fn(cos, b)
    psi3 = (-1j * wa) * apply_raise(apply_diag_fn(sin, a), tol)
    psi4 = (-1j * wb) * apply_raise(apply_diag_fn(sin, b), tol)
    return ComponentSet((psi1, psi2, psi3, psi4), float(t), Scenario.FIELD_MIXTURE)


def evolve_atom_mixture(spec: ScenarioSpec, t: float) -> ComponentSet:
    """Atom in a mixture of excited and ground states, field coherent."""
    _check(spec, Scenario.ATOM_MIXTURE, t)
    dim, tol = spec.effective_dim, spec.tail_tolerance
    a = coherent_state(spec.alpha, dim, tol)
    we, wg = math.sqrt(spec.C), math.sqrt(1.0 - spec.C)
    psi1 = we * apply_diag_fn(_cos_np1(t), a)
    psi2 = (-1j * wg) * apply_lower(apply_diag_fn(_sin_n(t), a))
    psi3 = (-1j * we) * apply_raise(apply_diag_fn(_sin_np1(t), a), tol)
    psi4 = wg * apply_diag_fn(_cos_n(t), a)
    return ComponentSet((psi1, psi2, psi3, psi4), float(t), Scenario.ATOM_MIXTURE)


def evolve(spec: ScenarioSpec, t: float) -> ComponentSet:
    if spec.scenario is Scenario.FIELD_MIXTURE:
        return evolve_field_mixture(spec, t)
    return evolve_atom_mixture(spec, t)


def atomic_inversion(cs: ComponentSet) -> float:
    """Excited minus ground population, ``Tr(rho_A sigma_z)``."""
    excited = math.fsum(cs[k].norm2() for k in cs.row_map[EXCITED])
    ground = math.fsum(cs[k].norm2() for k in cs.row_map[GROUND])
    return min(max(excited - ground, -1.0), 1.0)
