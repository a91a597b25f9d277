import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jcentropy.dynamics import ComponentSet, Scenario, ScenarioSpec, evolve
from jcentropy.exceptions import NegativeEigenvalueError, NonHermitianError, NormalizationError
from jcentropy.fock import FockVector
from jcentropy.virtual_atom import (
    GramMatrix,
    SpectrumResult,
    atomic_eigenvalues,
    atomic_entropy,
    atomic_state,
    clamp_spectrum,
    entropy_from_spectrum,
    field_entropy,
    gram_matrix,
    hermitian_eigenvalues,
    purity,
)

from conftest import FIELD_MIX, ATOM_MIX, binary_entropy, random_density

LN2, LN4 = math.log(2), math.log(4)


# ---- gram_matrix ---------------------------------------------------------

def test_gram_field_mixture_t0():
    p = gram_matrix(evolve(FIELD_MIX, 0.0)).entries
    np.testing.assert_allclose(np.diag(p).real, [0.5, 0.5, 0, 0], atol=1e-15)
    assert abs(p[0, 1] - math.exp(-32) / 2) < 1e-16
    assert abs(p[0, 1] - p[1, 0].conjugate()) == 0


def test_gram_pure_state():
    spec = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=4, beta=-4, C=1.0, dim=64)
    p = gram_matrix(evolve(spec, 0.0)).entries
    expected = np.zeros((4, 4))
    expected[0, 0] = 1
    np.testing.assert_allclose(p, expected, atol=1e-15)


@pytest.mark.parametrize("t", [0.0, 0.7, 3.3, 17.0])
def test_gram_trace_is_total_norm(t):
    cs = evolve(FIELD_MIX, t)
    g = gram_matrix(cs)
    assert abs(g.trace - 1) < 1e-10
    assert abs(g.trace - cs.total_norm2()) < 1e-14
    assert g.asymmetry < 1e-15


def test_gram_normalization_error():
    cs = ComponentSet((FockVector([1.0, 1.0]), FockVector([0.0, 1.0])), 0.0, Scenario.FIELD_MIXTURE)
    with pytest.raises(NormalizationError):
        gram_matrix(cs)


# ---- hermitian_eigenvalues -------------------------------------------------

def test_eigenvalues_identity_case():
    res = hermitian_eigenvalues(np.diag([1.0, 0, 0, 0]))
    np.testing.assert_array_equal(res.eigenvalues, [1, 0, 0, 0])


@pytest.mark.parametrize("g", [0.0, 0.3, 1e-14, 0.999])
def test_eigenvalues_2x2_block(g):
    p = np.diag([0.5, 0.5, 0, 0]).astype(complex)
    p[0, 1] = p[1, 0] = g / 2
    np.testing.assert_allclose(hermitian_eigenvalues(p).eigenvalues, [(1 + g) / 2, (1 - g) / 2, 0, 0], atol=1e-15)


def test_eigenvalues_rejects_non_hermitian():
    p = np.diag([0.5, 0.5]).astype(complex)
    p[0, 1] = 0.1
    with pytest.raises(NonHermitianError):
        hermitian_eigenvalues(p)


def test_eigenvalues_rejects_negative():
    with pytest.raises(NegativeEigenvalueError):
        hermitian_eigenvalues(np.diag([1.1, -0.1]))


def test_clamp_small_negative():
    res = clamp_spectrum([0.6, 0.4 + 1e-9, -1e-9])
    assert np.all(res.eigenvalues >= 0)
    assert math.isclose(res.eigenvalues.sum(), 1.0, abs_tol=1e-16)
    assert res.clamp_delta == pytest.approx(1e-9)


def test_eigenvalue_sum_before_renormalization(rng):
    for t in np.linspace(0, 25, 11):
        res = hermitian_eigenvalues(gram_matrix(evolve(FIELD_MIX, t)))
        assert abs(res.raw_sum - 1) < 1e-10


# ---- entropy / purity ----------------------------------------------------

def test_entropy_examples():
    assert entropy_from_spectrum(SpectrumResult(np.array([1.0, 0, 0, 0]))) == 0
    assert abs(entropy_from_spectrum(np.full(4, 0.25)) - LN4) < 1e-15
    assert abs(entropy_from_spectrum([0.5, 0.5, 0, 0]) - LN2) < 1e-15


def test_purity_examples():
    assert purity(np.diag([1.0, 0, 0, 0])) == 0
    assert purity(GramMatrix(np.diag([0.5, 0.5, 0, 0]))) == 0.5


def test_purity_matches_pairwise_expansion(rng):
    p = random_density(rng, 4)
    expanded = 1 - sum(abs(p[k, k]) ** 2 for k in range(4)) - 2 * sum(
        abs(p[i, j]) ** 2 for i in range(4) for j in range(i + 1, 4)
    )
    assert abs(purity(p) - expanded) < 1e-15


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 6), st.integers(1, 6))
def test_spectrum_invariants(seed, n, rank):
    rng = np.random.default_rng(seed)
    p = random_density(rng, n, min(rank, n))
    res = hermitian_eigenvalues(p)
    lam = res.eigenvalues
    assert abs(purity(p) - (1 - np.sum(lam**2))) < 1e-10
    s = entropy_from_spectrum(res)
    assert -1e-15 <= s <= math.log(n) + 1e-12
    assert abs(res.raw_sum - 1) < 1e-10
    assert 0 <= purity(p) <= 1 - 1 / n + 1e-12


def test_entropy_max_only_at_uniform():
    assert entropy_from_spectrum([0.26, 0.24, 0.25, 0.25]) < LN4


# ---- atomic state --------------------------------------------------------

def test_atomic_state_examples():
    np.testing.assert_allclose(atomic_state(evolve(FIELD_MIX, 0.0)), [[1, 0], [0, 0]], atol=1e-15)
    np.testing.assert_allclose(atomic_state(evolve(ATOM_MIX, 0.0)), [[0.5, 0], [0, 0.5]], atol=1e-15)
    vac = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=0, beta=0, C=0.5, dim=8)
    rho = atomic_state(evolve(vac, math.pi / 4))
    np.testing.assert_allclose(rho, [[0.5, 0], [0, 0.5]], atol=1e-15)


def test_atomic_state_coherence_layout():
    # rho_A[g, e] = P13 + P24 for a state with genuine coherence
    spec = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=1 + 1j, beta=0.5, C=0.3, dim=40)
    cs = evolve(spec, 0.8)
    p = gram_matrix(cs).entries
    rho = atomic_state(cs)
    assert abs(rho[1, 0]) > 1e-3
    assert abs(rho[1, 0] - (p[0, 2] + p[1, 3])) < 1e-15
    assert abs(rho[0, 1] - np.conj(p[0, 2] + p[1, 3])) < 1e-15
    assert abs(rho[0, 0] - (p[0, 0] + p[1, 1])) < 1e-15


def test_atomic_eigenvalue_examples():
    assert atomic_eigenvalues([[1, 0], [0, 0]]) == (1.0, 0.0)
    assert atomic_eigenvalues([[0.5, 0], [0, 0.5]]) == (0.5, 0.5)


@pytest.mark.parametrize("seed", range(8))
def test_atomic_eigenvalues_trace_det_oracle(seed):
    rho = random_density(np.random.default_rng(seed), 2)
    tr, det = np.trace(rho).real, np.linalg.det(rho).real
    disc = math.sqrt(tr * tr - 4 * det)
    lp, lm = atomic_eigenvalues(rho)
    assert abs(lp - (tr + disc) / 2) < 1e-12
    assert abs(lm - (tr - disc) / 2) < 1e-12


def test_atomic_entropy_examples():
    assert atomic_entropy([[1, 0], [0, 0]]) == 0
    assert abs(atomic_entropy([[0.5, 0], [0, 0.5]]) - LN2) < 1e-15
    vac = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=0, beta=0, C=0.5, dim=8)
    assert abs(atomic_entropy(atomic_state(evolve(vac, math.pi / 4))) - LN2) < 1e-12


# ---- cross properties over sweeps ----------------------------------------

@pytest.mark.parametrize("alpha", [4, 2 + 1j])
def test_pure_state_field_equals_atom(alpha):
    spec = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=alpha, beta=-4, C=1.0, dim=64)
    for t in np.linspace(0, 25, 126):
        cs = evolve(spec, t)
        assert abs(field_entropy(cs) - atomic_entropy(atomic_state(cs))) < 1e-8


@pytest.mark.parametrize("spec", [FIELD_MIX, ATOM_MIX])
def test_zero_coincidence(spec):
    for t in np.linspace(0, 25, 251):
        g = gram_matrix(evolve(spec, t))
        s = entropy_from_spectrum(hermitian_eigenvalues(g))
        assert (s < 1e-6) == (purity(g) < 1e-6)


@pytest.mark.parametrize("t", [0.0, 0.4, 2.0])
def test_vacuum_field_entropy_is_binary(t):
    # alpha = beta = 0: both branches coincide, so the field is cos^2/sin^2 mixed
    vac = ScenarioSpec(Scenario.FIELD_MIXTURE, alpha=0, beta=0, C=0.5, dim=8)
    expected = binary_entropy(math.cos(t) ** 2)
    assert abs(field_entropy(evolve(vac, t)) - expected) < 1e-12
