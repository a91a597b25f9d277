"""scikit-learn style front end.

:class:`JCEntropyTransformer` maps an array of dimensionless times
``lambda * t`` to a feature matrix of entropies and related observables, so a
time sweep composes with pipelines, ``clone`` and ``get_params`` like any
other transformer.
"""
from __future__ import annotations

import math
from dataclasses import astuple, dataclass
from typing import List, Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import oracle as _oracle
from .dynamics import ScenarioSpec, atomic_inversion, evolve
from .fock import TAIL_TOLERANCE
from .validation import check_complex, check_dim, check_scenario, check_times, check_weight
from .virtual_atom import (
    atomic_entropy,
    atomic_state,
    entropy_from_spectrum,
    gram_matrix,
    hermitian_eigenvalues,
    purity,
)

N_COMPONENTS = 4
BASE_COLUMNS = ("t", "S_F", "S_A", "xi_F", "inversion") + tuple(
    f"lambda_{k + 1}" for k in range(N_COMPONENTS)
)
ORACLE_COLUMNS = ("S_AB", "al_lower_margin", "al_upper_margin", "oracle_S_F_delta")


@dataclass(frozen=True)
class TimeSeriesRecord:
    t: float
    S_F: float
    S_A: float
    xi_F: float
    inversion: float
    lambda_1: float
    lambda_2: float
    lambda_3: float
    lambda_4: float
    S_AB: Optional[float] = None
    al_lower_margin: Optional[float] = None
    al_upper_margin: Optional[float] = None
    oracle_S_F_delta: Optional[float] = None

    @property
    def has_oracle(self) -> bool:
        return self.S_AB is not None

    def columns(self):
        return BASE_COLUMNS + (ORACLE_COLUMNS if self.has_oracle else ())

    def values(self):
        return astuple(self)[: len(self.columns())]


class JCEntropyTransformer(TransformerMixin, BaseEstimator):
    """Field/atom entropies of the resonant Jaynes-Cummings model vs. time.

    Parameters
    ----------
    scenario : {"field-mixture", "atom-mixture"}
        Which subsystem starts mixed. In ``field-mixture`` the field is
        ``C|alpha><alpha| + (1-C)|beta><beta|`` and the atom excited; in
        ``atom-mixture`` the atom is ``C|e><e| + (1-C)|g><g|`` and the field
        ``|alpha>``.
    alpha, beta : complex
        Coherent amplitudes (``beta`` is ignored for ``atom-mixture``).
    C : float
        Mixing weight in ``[0, 1]``.
    dim : int
        Fock truncation; 0 chooses one from the amplitudes.
    oracle : bool
        Also propagate the full joint density matrix and report ``S_AB``,
        Araki-Lieb margins and the field-entropy discrepancy.
    tail_tolerance : float
        Largest probability allowed to leak past the truncation.

    Attributes
    ----------
    spec_ : ScenarioSpec
    dim_ : int
    feature_names_out_ : ndarray of str
        Output columns, without ``t``.
    """

    def __init__(self, scenario="field-mixture", alpha=4.0, beta=-4.0, C=0.5, dim=0,
                 oracle=False, tail_tolerance=TAIL_TOLERANCE):
        self.scenario = scenario
        self.alpha = alpha
        self.beta = beta
        self.C = C
        self.dim = dim
        self.oracle = oracle
        self.tail_tolerance = tail_tolerance

    def fit(self, X=None, y=None):
        """Validate parameters and prepare the (optional) oracle propagator."""
        self.spec_ = ScenarioSpec(
            scenario=check_scenario(self.scenario),
            alpha=check_complex(self.alpha, "alpha"),
            beta=check_complex(self.beta, "beta"),
            C=check_weight(self.C),
            dim=check_dim(self.dim),
            tail_tolerance=float(self.tail_tolerance),
        )
        self.dim_ = self.spec_.effective_dim
        # Fail early on a truncation that cannot hold the initial state.
        evolve(self.spec_, 0.0)
        self.oracle_ = _oracle.JointOracle(self.spec_) if self.oracle else None
        columns = BASE_COLUMNS[1:] + (ORACLE_COLUMNS if self.oracle else ())
        self.feature_names_out_ = np.array(columns, dtype=object)
        self.n_features_in_ = 1
        return self

    def record(self, t: float) -> TimeSeriesRecord:
        check_is_fitted(self, "spec_")
        t = float(t)
        cs = evolve(self.spec_, t)
        gram = gram_matrix(cs)
        spectrum = hermitian_eigenvalues(gram)
        s_f = entropy_from_spectrum(spectrum)
        s_a = atomic_entropy(atomic_state(cs, gram))
        lambdas = list(spectrum.eigenvalues) + [0.0] * (N_COMPONENTS - len(spectrum))
        base = [t, s_f, s_a, purity(gram), atomic_inversion(cs)] + lambdas[:N_COMPONENTS]
        if self.oracle_ is None:
            return TimeSeriesRecord(*base)
        rho = self.oracle_.state(t)
        s_f_oracle = _oracle.vn_entropy(_oracle.partial_trace_atom(rho))
        s_a_oracle = _oracle.vn_entropy(_oracle.partial_trace_field(rho))
        s_ab = _oracle.vn_entropy(rho)
        report = _oracle.check_araki_lieb(s_a_oracle, s_f_oracle, s_ab)
        return TimeSeriesRecord(
            *base, s_ab, report.lower_margin, report.upper_margin, abs(s_f - s_f_oracle)
        )

    def records(self, X) -> List[TimeSeriesRecord]:
        return [self.record(t) for t in check_times(X)]

    def transform(self, X):
        """Return an ``(n_times, n_features)`` array; see ``get_feature_names_out``."""
        recs = self.records(X)
        width = len(self.feature_names_out_)
        out = np.empty((len(recs), width))
        for i, rec in enumerate(recs):
            out[i] = rec.values()[1:]
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()


def time_grid(t_max: float, steps: int) -> np.ndarray:
    """``steps + 1`` points ``i * t_max / steps``; grids nest when ``steps`` doubles."""
    if steps < 1 or not (math.isfinite(t_max) and t_max > 0):
        raise ValueError("need steps >= 1 and a positive finite t_max")
    return np.array([i * t_max / steps for i in range(steps + 1)])
