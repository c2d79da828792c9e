"""Dense complex linear algebra kernels.

Hermitian spectral queries, Hilbert-Schmidt geometry, and seeded random
ensembles. Everything works on plain square numpy arrays with complex dtype.
All functions are pure; random draws take an explicit integer seed, so
results are reproducible and independent of call order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotHermitian

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_matrix",
    "same_dim",
    "dagger",
    "is_hermitian",
    "require_hermitian",
    "eig_hermitian",
    "min_eigenvalue",
    "operator_norm",
    "spectral_norm",
    "is_psd",
    "hs_inner",
    "hs_norm",
    "traceless",
    "derive_seed",
    "gaussian_complex",
    "random_hermitian",
    "random_density",
]


@dataclass(frozen=True)
class Tolerance:
    """Zero threshold for residual comparisons.

    With ``rel=True`` (the default) a residual measured against operands of
    combined norm ``s`` passes when it is at most ``zero_tol * max(1, s)``;
    the floor keeps tiny operands from demanding impossible absolute
    accuracy. With ``rel=False`` the threshold is ``zero_tol`` flat.
    """

    zero_tol: float = 1e-9
    rel: bool = True

    def __post_init__(self) -> None:
        if not self.zero_tol > 0.0:
            raise ValueError(f"zero_tol must be positive, got {self.zero_tol!r}")

    def threshold(self, scale: float = 1.0) -> float:
        """Effective threshold for a comparison at the given norm scale."""
        if self.rel:
            return self.zero_tol * max(1.0, float(scale))
        return self.zero_tol


#: Default tolerance. Dense Hermitian eigensolvers land near 1e-13 relative
#: error for the dimensions used here, so 1e-9 leaves headroom for residuals
#: accumulated through products and closure loops.
DEFAULT_TOL = Tolerance()


def as_matrix(m: np.ndarray) -> np.ndarray:
    """Coerce input to a square complex matrix."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    return a


def same_dim(*mats: np.ndarray) -> int:
    """Common dimension of square matrices; raises DimensionMismatch otherwise."""
    if not mats:
        raise DimensionMismatch("no matrices given")
    first = as_matrix(mats[0])
    n = first.shape[0]
    for m in mats[1:]:
        a = as_matrix(m)
        if a.shape[0] != n:
            raise DimensionMismatch(f"dimensions differ: {n} vs {a.shape[0]}")
    return n


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(m).T


def spectral_norm(m: np.ndarray) -> float:
    """Largest singular value. Valid for any square matrix."""
    a = as_matrix(m)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def is_hermitian(m: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the max entry of m - m^dagger is within tolerance."""
    a = as_matrix(m)
    defect = float(np.max(np.abs(a - dagger(a)))) if a.size else 0.0
    return defect <= tol.threshold(spectral_norm(a))


def require_hermitian(m: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    a = as_matrix(m)
    if not is_hermitian(a, tol):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return a


def eig_hermitian(
    m: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """Ascending real eigenvalues and orthonormal eigenvector columns."""
    a = require_hermitian(m, tol)
    return np.linalg.eigh(a)


def min_eigenvalue(m: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> float:
    a = require_hermitian(m, tol)
    return float(np.linalg.eigvalsh(a)[0])


def operator_norm(m: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> float:
    """Largest absolute eigenvalue of a Hermitian matrix."""
    a = require_hermitian(m, tol)
    w = np.linalg.eigvalsh(a)
    return float(np.max(np.abs(w)))


def is_psd(m: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when every eigenvalue is >= -threshold at the matrix's own scale."""
    a = require_hermitian(m, tol)
    w = np.linalg.eigvalsh(a)
    scale = float(np.max(np.abs(w)))
    return float(w[0]) >= -tol.threshold(scale)


def hs_inner(a: np.ndarray, b: np.ndarray) -> float:
    """Hilbert-Schmidt inner product Tr(a b), real for Hermitian operands."""
    x = as_matrix(a)
    y = as_matrix(b)
    if x.shape != y.shape:
        raise DimensionMismatch(f"shapes differ: {x.shape} vs {y.shape}")
    return float(np.real(np.sum(x * y.T)))


def hs_norm(a: np.ndarray) -> float:
    """Frobenius norm; equals sqrt(hs_inner(a, a)) for Hermitian a."""
    return float(np.linalg.norm(as_matrix(a)))


def traceless(m: np.ndarray) -> np.ndarray:
    """Remove the identity component."""
    a = as_matrix(m)
    n = a.shape[0]
    return a - (np.trace(a) / n) * np.eye(n)


def derive_seed(seed: int, index: int) -> int:
    """Per-trial seed: XOR with the trial index, folded to 64 bits.

    Keeps trials independent of scheduling so batch runs replay exactly.
    """
    return (int(seed) ^ int(index)) & 0xFFFFFFFFFFFFFFFF


def gaussian_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    """n x n matrix with independent standard complex Gaussian entries."""
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_hermitian(n: int, seed: int) -> np.ndarray:
    """GUE-style sample: (G + G^dagger) / 2 for Gaussian G."""
    if n < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {n}")
    g = gaussian_complex(np.random.default_rng(seed), n)
    return 0.5 * (g + dagger(g))


def random_density(n: int, seed: int) -> np.ndarray:
    """Wishart-normalized density matrix G G^dagger / Tr(G G^dagger)."""
    if n < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {n}")
    g = gaussian_complex(np.random.default_rng(seed), n)
    w = g @ dagger(g)
    return w / float(np.real(np.trace(w)))
