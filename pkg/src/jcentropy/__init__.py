"""Entanglement entropies of the Jaynes-Cummings model with mixed initial states."""
from .dynamics import ComponentSet, Scenario, ScenarioSpec, atomic_inversion, evolve, evolve_atom_mixture, evolve_field_mixture
from .estimator import JCEntropyTransformer, TimeSeriesRecord
from .exceptions import (
    ConfigParseError,
    DimensionMismatch,
    NegativeEigenvalueError,
    NonHermitianError,
    NormalizationError,
    TailMassError,
    UsageError,
)
from .fock import FockVector, apply_diag_fn, apply_lower, apply_raise, coherent_state, inner_product
from .virtual_atom import (
    GramMatrix,
    SpectrumResult,
    atomic_eigenvalues,
    atomic_entropy,
    atomic_state,
    entropy_from_spectrum,
    gram_matrix,
    hermitian_eigenvalues,
    purity,
)

__version__ = "0.1.0"
