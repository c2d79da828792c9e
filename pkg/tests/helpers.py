"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the package's own span/closure machinery:
ranks come from an SVD of stacked real vectorizations, 2x2 eigenvalues from
the quadratic formula.
"""

from __future__ import annotations

import math

import numpy as np

from ljlab import close_under, jordan, span
from ljlab.subspace import RealSubspace

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

# PSD pair whose symmetrized product dips below zero
P0 = np.array([[1, 0], [0, 0]], dtype=complex)
AVR_B = 0.5 * (I2 + SX)

# a >= b >= 0 but a@a - b@b is indefinite
SQ_A = np.array([[1.5, 0.5], [0.5, 0.5]], dtype=complex)
SQ_B = P0


def rank_of(mats: list[np.ndarray], tol: float | None = None) -> int:
    """Real-span rank via stacked [Re | Im] vectorizations, independent of span()."""
    rows = [np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats]
    stacked = np.stack(rows)
    if tol is None:
        return int(np.linalg.matrix_rank(stacked))
    sv = np.linalg.svd(stacked, compute_uv=False)
    return int(np.sum(sv > tol * max(1.0, sv[0])))


def eig2_oracle(m: np.ndarray) -> tuple[float, float]:
    """Eigenvalues of a 2x2 Hermitian matrix by the quadratic formula."""
    tr = float(np.real(m[0, 0] + m[1, 1]))
    det = float(np.real(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]))
    disc = math.sqrt(max(tr * tr - 4.0 * det, 0.0))
    return (tr - disc) / 2.0, (tr + disc) / 2.0


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    # fix the phase ambiguity so the result is a deterministic function of g
    return q * (np.diag(r) / np.abs(np.diag(r)))


def commutative_algebra(n: int, seed: int, count: int | None = None) -> RealSubspace:
    """Jordan closure of a conjugated-diagonal family: commutative by construction."""
    rng = np.random.default_rng(seed)
    u = random_unitary(n, rng)
    k = int(rng.integers(1, n + 1)) if count is None else count
    mats = [u @ np.diag(rng.standard_normal(n)) @ u.conj().T for _ in range(k)]
    return close_under(span(mats), jordan)


def block_2_1_algebra() -> RealSubspace:
    """Hermitian block-diag(2, 1) inside 3x3: a 5-dimensional subalgebra."""
    mats = []
    for small in (I2, SX, SY, SZ):
        m = np.zeros((3, 3), dtype=complex)
        m[:2, :2] = small
        mats.append(m)
    e22 = np.zeros((3, 3), dtype=complex)
    e22[2, 2] = 1.0
    mats.append(e22)
    return span(mats)


def embed_block(small: np.ndarray) -> np.ndarray:
    """Embed a 2x2 Hermitian matrix into the upper block of a 3x3 zero matrix."""
    m = np.zeros((3, 3), dtype=complex)
    m[:2, :2] = small
    return m
