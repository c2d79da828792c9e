from __future__ import annotations

import numpy as np
import pytest

from helpers import SX, SY, SZ, I2, eig2_oracle
from ljlab import (
    DEFAULT_TOL,
    DimensionMismatch,
    NotHermitian,
    Tolerance,
    derive_seed,
    eig_hermitian,
    hs_inner,
    hs_norm,
    is_hermitian,
    is_psd,
    min_eigenvalue,
    operator_norm,
    random_density,
    random_hermitian,
    spectral_norm,
    traceless,
)


def test_tolerance_threshold_scaling():
    tol = Tolerance(zero_tol=1e-9, rel=True)
    assert tol.threshold(0.5) == 1e-9          # floor at scale 1
    assert tol.threshold(100.0) == pytest.approx(1e-7)
    flat = Tolerance(zero_tol=1e-6, rel=False)
    assert flat.threshold(1e12) == 1e-6


def test_tolerance_rejects_nonpositive():
    with pytest.raises(ValueError):
        Tolerance(zero_tol=0.0)
    with pytest.raises(ValueError):
        Tolerance(zero_tol=-1e-9)


def test_is_hermitian_basics():
    assert is_hermitian(SX)
    assert is_hermitian(SY)
    assert is_hermitian(np.zeros((3, 3)))
    # [[0, i], [i, 0]] is symmetric but not Hermitian
    assert not is_hermitian(np.array([[0, 1j], [1j, 0]]))
    assert not is_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))


def test_is_hermitian_scales_with_norm():
    big = 1e9 * SZ.astype(complex)
    big = big + 1e-4 * np.array([[0, 1j], [1j, 0]])  # asymmetry tiny vs norm
    assert is_hermitian(big)
    assert not is_hermitian(big, Tolerance(zero_tol=1e-9, rel=False))


def test_non_square_rejected():
    with pytest.raises(DimensionMismatch):
        is_hermitian(np.zeros((2, 3)))


def test_eig_hermitian_matches_quadratic_oracle():
    for i in range(100):
        rng = np.random.default_rng(i)
        g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        m = 0.5 * (g + g.conj().T)
        w, v = eig_hermitian(m)
        lo, hi = eig2_oracle(m)
        np.testing.assert_allclose(w, [lo, hi], atol=1e-12)
        # eigenvector columns reconstruct the matrix
        np.testing.assert_allclose(v @ np.diag(w) @ v.conj().T, m, atol=1e-12)


def test_eig_hermitian_rejects_nonhermitian():
    with pytest.raises(NotHermitian):
        eig_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(NotHermitian):
        min_eigenvalue(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(NotHermitian):
        operator_norm(np.array([[0, 1], [0, 0]], dtype=complex))


def test_spectral_queries_on_fixture():
    m = np.diag([3.0, -5.0]).astype(complex)
    assert min_eigenvalue(m) == -5.0
    assert operator_norm(m) == 5.0
    assert not is_psd(m)
    assert is_psd(np.diag([0.0, 2.0]).astype(complex))
    assert operator_norm(np.zeros((2, 2))) == 0.0


def test_is_psd_tolerates_rounding_negatives():
    m = np.diag([1.0, -1e-12]).astype(complex)
    assert is_psd(m)
    assert not is_psd(np.diag([1.0, -1e-6]).astype(complex))


def test_spectral_norm_general_matrix():
    n = np.array([[0, 2], [0, 0]], dtype=complex)  # nilpotent, eigenvalues all 0
    assert spectral_norm(n) == pytest.approx(2.0)


def test_hs_inner_fixtures():
    assert hs_inner(np.eye(4), np.eye(4)) == pytest.approx(4.0)
    assert hs_inner(SX, SY) == pytest.approx(0.0)
    assert hs_inner(SX, SX) == pytest.approx(2.0)
    assert hs_inner(SZ, I2) == pytest.approx(0.0)
    with pytest.raises(DimensionMismatch):
        hs_inner(SX, np.eye(3))


def test_hs_norm_consistent_with_inner():
    for i in range(50):
        m = random_hermitian(3, seed=i)
        assert hs_norm(m) == pytest.approx(np.sqrt(hs_inner(m, m)), rel=1e-12)


def test_random_hermitian_properties():
    a = random_hermitian(4, seed=123)
    b = random_hermitian(4, seed=123)
    c = random_hermitian(4, seed=124)
    np.testing.assert_array_equal(a, b)
    assert np.max(np.abs(a - c)) > 1e-3
    for i in range(50):
        m = random_hermitian(3, seed=i)
        assert is_hermitian(m)


def test_random_density_properties():
    np.testing.assert_allclose(random_density(1, seed=0), [[1.0]])
    for i in range(50):
        rho = random_density(3, seed=i)
        assert is_hermitian(rho)
        assert is_psd(rho)
        assert np.real(np.trace(rho)) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_array_equal(random_density(3, seed=9), random_density(3, seed=9))


def test_random_rejects_bad_dim():
    with pytest.raises(DimensionMismatch):
        random_hermitian(0, seed=1)
    with pytest.raises(DimensionMismatch):
        random_density(-2, seed=1)


def test_derive_seed_is_injective_over_trials():
    seeds = {derive_seed(42, t) for t in range(2000)}
    assert len(seeds) == 2000
    assert all(0 <= s < 2**64 for s in seeds)


def test_traceless_removes_identity_component():
    for i in range(20):
        m = traceless(random_hermitian(4, seed=i))
        assert abs(np.trace(m)) < 1e-12
