"""Quantumness witnesses: construction and randomized search.

A witness is an observable whose behavior is impossible in a commutative
algebra: a nonzero Jordan associator, its PSD square, or a Jordan product
of two PSD observables with a negative eigenvalue. Searches are multistart
over seeded random candidates followed by greedy coordinate refinement;
results are deterministic functions of (n, seed, budget).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    dagger,
    derive_seed,
    gaussian_complex,
    spectral_norm,
)
from .products import associator, jordan
from .subspace import full_hermitian_basis

__all__ = [
    "WitnessReport",
    "associator_witness",
    "squared_witness",
    "avr_witness_search",
    "associator_witness_search",
]


@dataclass(frozen=True, eq=False)
class WitnessReport:
    """A witness candidate with its measured violation.

    ``violation`` is the operator norm of the witness for associator kinds
    and the most negative eigenvalue of the product for the avr kind.
    ``found`` is False when no violation exists (dimension 1) or the
    candidate is numerically zero.
    """

    kind: str
    witness: np.ndarray | None
    inputs: tuple[np.ndarray, ...]
    violation: float
    found: bool


def _min_eig(m: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(m)[0])


def associator_witness(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> WitnessReport:
    """Witness q = (a o b) o c - a o (b o c); violation is its norm."""
    q = associator(a, b, c)
    violation = spectral_norm(q)
    scale = spectral_norm(a) * spectral_norm(b) * spectral_norm(c)
    return WitnessReport(
        kind="associator",
        witness=q,
        inputs=(a, b, c),
        violation=violation,
        found=violation > tol.threshold(scale),
    )


def squared_witness(q: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> WitnessReport:
    """PSD witness q o q; vanishes exactly when q does."""
    w = jordan(q, q)
    violation = spectral_norm(w)
    scale = spectral_norm(q) ** 2
    return WitnessReport(
        kind="squared",
        witness=w,
        inputs=(q,),
        violation=violation,
        found=violation > tol.threshold(scale),
    )


def _unit_psd(g: np.ndarray) -> np.ndarray:
    w = g @ dagger(g)
    nrm = spectral_norm(w)
    return w / nrm if nrm > 0.0 else w


def _validate_search_args(n: int, budget: int) -> None:
    if n < 1:
        raise ValidationError(f"dimension must be >= 1, got {n}")
    if budget < 1:
        raise ValidationError(f"budget must be >= 1, got {budget}")


def avr_witness_search(
    n: int, seed: int, budget: int, tol: Tolerance = DEFAULT_TOL
) -> WitnessReport:
    """Search for PSD observables a, b whose Jordan product is not PSD.

    Candidates are unit-norm Wishart factors; the best trial (most negative
    eigenvalue of a o b) is refined by greedy perturbation of single factor
    entries with a shrinking step. Dimension 1 is commutative, so the report
    comes back with found False.
    """
    _validate_search_args(n, budget)
    if n == 1:
        return WitnessReport(kind="avr", witness=None, inputs=(), violation=0.0, found=False)

    def score(g: np.ndarray, h: np.ndarray) -> float:
        return _min_eig(jordan(_unit_psd(g), _unit_psd(h)))

    best_val = np.inf
    best: tuple[np.ndarray, np.ndarray] | None = None
    for t in range(budget):
        rng = np.random.default_rng(derive_seed(seed, t))
        g = gaussian_complex(rng, n)
        h = gaussian_complex(rng, n)
        val = score(g, h)
        if val < best_val:
            best_val, best = val, (g, h)
    assert best is not None
    g, h = best
    cur = best_val
    rng = np.random.default_rng(derive_seed(seed, budget))
    step = 0.1
    rejects = 0
    for _ in range(6000):
        if step < 1e-6:
            break
        target = g if rng.integers(2) == 0 else h
        i = int(rng.integers(n))
        j = int(rng.integers(n))
        bump = step * rng.standard_normal()
        if rng.integers(2) == 1:
            bump = 1j * bump
        cand = target.copy()
        cand[i, j] += bump
        cand_g, cand_h = (cand, h) if target is g else (g, cand)
        val = score(cand_g, cand_h)
        if val < cur:
            g, h, cur = cand_g, cand_h, val
            rejects = 0
        else:
            rejects += 1
            if rejects >= 20:
                step *= 0.5
                rejects = 0
    a = _unit_psd(g)
    b = _unit_psd(h)
    witness = jordan(a, b)
    violation = _min_eig(witness)
    return WitnessReport(
        kind="avr",
        witness=witness,
        inputs=(a, b),
        violation=violation,
        found=violation < -tol.zero_tol,
    )


def associator_witness_search(
    n: int, seed: int, budget: int, tol: Tolerance = DEFAULT_TOL
) -> WitnessReport:
    """Search for a triple with a large Jordan associator.

    Trials draw unit-norm Hermitian triples; refinement perturbs along the
    canonical Hermitian basis directions, renormalizing after each step.
    """
    _validate_search_args(n, budget)
    if n == 1:
        return WitnessReport(
            kind="associator", witness=None, inputs=(), violation=0.0, found=False
        )
    dirs = full_hermitian_basis(n)

    def unit_herm(rng: np.random.Generator) -> np.ndarray:
        g = gaussian_complex(rng, n)
        m = 0.5 * (g + dagger(g))
        return m / spectral_norm(m)

    def score(triple: list[np.ndarray]) -> float:
        return spectral_norm(associator(*triple))

    best_val = -np.inf
    best: list[np.ndarray] | None = None
    for t in range(budget):
        rng = np.random.default_rng(derive_seed(seed, t))
        triple = [unit_herm(rng) for _ in range(3)]
        val = score(triple)
        if val > best_val:
            best_val, best = val, triple
    assert best is not None
    triple = best
    cur = best_val
    rng = np.random.default_rng(derive_seed(seed, budget))
    step = 0.1
    rejects = 0
    for _ in range(6000):
        if step < 1e-6:
            break
        slot = int(rng.integers(3))
        direction = dirs[int(rng.integers(len(dirs)))]
        cand = triple[slot] + (step * rng.standard_normal()) * direction
        nrm = spectral_norm(cand)
        if nrm == 0.0:
            continue
        cand = cand / nrm
        cand_triple = list(triple)
        cand_triple[slot] = cand
        val = score(cand_triple)
        if val > cur:
            triple, cur = cand_triple, val
            rejects = 0
        else:
            rejects += 1
            if rejects >= 20:
                step *= 0.5
                rejects = 0
    a, b, c = triple
    witness = associator(a, b, c)
    violation = spectral_norm(witness)
    return WitnessReport(
        kind="associator",
        witness=witness,
        inputs=(a, b, c),
        violation=violation,
        found=violation > tol.zero_tol,
    )
