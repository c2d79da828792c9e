"""Real-linear subspaces of Hermitian matrices and closure machinery.

A subspace is stored as a Hilbert-Schmidt-orthonormal basis built by
sequential Gram-Schmidt. On top of that sit product closures, derived
algebras, centralizers, commutativity and associativity tests, a Killing
form nondegeneracy test, generation experiments, and the realization of a
commuting associative subalgebra as functions on its joint spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyInput,
    MaxRoundsExceeded,
    NotAssociative,
    NotClosed,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    derive_seed,
    hs_norm,
    same_dim,
    spectral_norm,
)
from .products import jordan, lie

__all__ = [
    "SPAN_RTOL",
    "POINT_MERGE_TOL",
    "RealSubspace",
    "full_hermitian_basis",
    "full_hermitian_space",
    "span",
    "close_under",
    "is_closed_under",
    "require_closed",
    "derived_algebra",
    "centralizer",
    "commutator_defect",
    "associator_defect",
    "is_commutative",
    "is_jordan_associative",
    "is_semisimple_lie",
    "GenerationReport",
    "lie_generate",
    "jordan_generate_three",
    "FunctionRepresentation",
    "function_representation",
    "PositivityReport",
    "check_positivity_closure",
]

Product = Callable[[np.ndarray, np.ndarray], np.ndarray]

#: Rank decision threshold for spans. Looser than Tolerance.zero_tol because
#: closure loops feed products of products back in, which amplifies roundoff.
SPAN_RTOL = 1e-8

#: Joint-spectrum points closer than this (sup distance) are merged; wide
#: enough to absorb eigensolver jitter, far below generic point spacing.
POINT_MERGE_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class RealSubspace:
    """Real span of Hermitian matrices with an orthonormal basis.

    ``basis`` is Hilbert-Schmidt orthonormal; ``dim_span`` may be zero.
    Instances are immutable and the basis arrays are read-only.
    """

    dim_ambient: int
    basis: tuple[np.ndarray, ...]

    @property
    def dim_span(self) -> int:
        return len(self.basis)

    @cached_property
    def _stacked(self) -> np.ndarray:
        if not self.basis:
            return np.zeros((0, self.dim_ambient, self.dim_ambient), dtype=complex)
        return np.stack(self.basis)

    def coeffs(self, m: np.ndarray) -> np.ndarray:
        """Real coordinates of m against the basis (its projection's coordinates)."""
        a = as_matrix(m)
        if a.shape[0] != self.dim_ambient:
            raise DimensionMismatch(
                f"matrix dim {a.shape[0]} does not match ambient dim {self.dim_ambient}"
            )
        return np.einsum("kab,ba->k", self._stacked, a).real

    def project(self, m: np.ndarray) -> np.ndarray:
        return np.tensordot(self.coeffs(m), self._stacked, axes=1)

    def residual(self, m: np.ndarray) -> float:
        """Distance from m to the subspace in Hilbert-Schmidt norm."""
        return hs_norm(as_matrix(m) - self.project(m))

    def contains(self, m: np.ndarray, rtol: float = SPAN_RTOL) -> bool:
        return self.residual(m) <= rtol * max(1.0, hs_norm(m))


def full_hermitian_basis(n: int) -> list[np.ndarray]:
    """Canonical orthonormal basis of the n x n Hermitian matrices.

    Diagonal units first, then for each i < j the symmetric and the
    antisymmetric (imaginary) unit, both scaled by 1/sqrt(2).
    """
    if n < 1:
        raise DimensionMismatch(f"dimension must be >= 1, got {n}")
    mats: list[np.ndarray] = []
    for k in range(n):
        m = np.zeros((n, n), dtype=complex)
        m[k, k] = 1.0
        mats.append(m)
    inv = 1.0 / math.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            s = np.zeros((n, n), dtype=complex)
            s[i, j] = inv
            s[j, i] = inv
            mats.append(s)
            y = np.zeros((n, n), dtype=complex)
            y[i, j] = -1j * inv
            y[j, i] = 1j * inv
            mats.append(y)
    for m in mats:
        m.setflags(write=False)
    return mats


def full_hermitian_space(n: int) -> RealSubspace:
    return RealSubspace(dim_ambient=n, basis=tuple(full_hermitian_basis(n)))


def span(matrices: Sequence[np.ndarray], rtol: float = SPAN_RTOL) -> RealSubspace:
    """Orthonormal basis of the real span, by sequential Gram-Schmidt.

    Input order is preserved: each matrix is orthogonalized against the
    basis so far (two projection passes for numerical stability) and kept
    when its residual exceeds ``rtol * max(1, ||input||)``. Raises
    EmptyInput for an empty list; an all-zero list yields dim_span 0.
    """
    mats = [as_matrix(m) for m in matrices]
    if not mats:
        raise EmptyInput("span of an empty list is undefined; pass at least one matrix")
    n = same_dim(*mats)
    basis: list[np.ndarray] = []
    for m in mats:
        norm_in = hs_norm(m)
        v = m.astype(complex, copy=True)
        if basis:
            stacked = np.stack(basis)
            for _ in range(2):
                c = np.einsum("kab,ba->k", stacked, v).real
                v = v - np.tensordot(c, stacked, axes=1)
        res = float(np.linalg.norm(v))
        if res > rtol * max(1.0, norm_in):
            u = v / res
            u.setflags(write=False)
            basis.append(u)
    return RealSubspace(dim_ambient=n, basis=tuple(basis))


def _product_pairs(r: int, product: Product) -> Iterable[tuple[int, int]]:
    # exploit symmetry of the named products; arbitrary callables get all pairs
    if product is jordan:
        return ((i, j) for i in range(r) for j in range(i, r))
    if product is lie:
        return ((i, j) for i in range(r) for j in range(i + 1, r))
    return ((i, j) for i in range(r) for j in range(r))


def _close_rounds(
    s: RealSubspace,
    product: Product,
    max_rounds: int | None,
    rtol: float,
) -> tuple[RealSubspace, int, list[int]]:
    if max_rounds is None:
        # dim grows by >= 1 per non-final round and is capped by n^2
        max_rounds = s.dim_ambient**2 + 1
    if max_rounds < 1:
        raise ValueError(f"max_rounds must be >= 1, got {max_rounds}")
    trajectory = [s.dim_span]
    cur = s
    rounds = 0
    while rounds < max_rounds:
        if cur.dim_span == 0:
            return cur, rounds, trajectory
        rounds += 1
        prods = [
            product(cur.basis[i], cur.basis[j])
            for i, j in _product_pairs(cur.dim_span, product)
        ]
        nxt = span(list(cur.basis) + prods, rtol)
        trajectory.append(nxt.dim_span)
        if nxt.dim_span == cur.dim_span:
            return nxt, rounds, trajectory
        cur = nxt
    raise MaxRoundsExceeded(f"closure still growing after {max_rounds} rounds")


def close_under(
    s: RealSubspace,
    product: Product,
    max_rounds: int | None = None,
    rtol: float = SPAN_RTOL,
) -> RealSubspace:
    """Smallest subspace containing s and closed under the given product.

    Breadth-first: each round adjoins all pairwise products of the current
    basis and re-spans, stopping when the dimension stabilizes. Idempotent.
    """
    closed, _, _ = _close_rounds(s, product, max_rounds, rtol)
    return closed


def is_closed_under(s: RealSubspace, product: Product, rtol: float = SPAN_RTOL) -> bool:
    return all(
        s.contains(product(s.basis[i], s.basis[j]), rtol)
        for i, j in _product_pairs(s.dim_span, product)
    )


def require_closed(s: RealSubspace, product: Product, rtol: float = SPAN_RTOL) -> None:
    if not is_closed_under(s, product, rtol):
        name = getattr(product, "__name__", str(product))
        raise NotClosed(f"subspace of dim {s.dim_span} is not closed under {name}")


def derived_algebra(L: RealSubspace, rtol: float = SPAN_RTOL) -> RealSubspace:
    """Span of all brackets of L, the derived algebra [L, L]."""
    require_closed(L, lie, rtol)
    r = L.dim_span
    brackets = [lie(L.basis[i], L.basis[j]) for i in range(r) for j in range(i + 1, r)]
    if not brackets:
        return RealSubspace(dim_ambient=L.dim_ambient, basis=())
    d0 = span(brackets, rtol)
    # brackets of basis pairs already span [L, L]; one closure round confirms
    return close_under(d0, lie, rtol=rtol)


def centralizer(
    L: RealSubspace, S: RealSubspace, tol: Tolerance = DEFAULT_TOL
) -> RealSubspace:
    """Elements of L whose bracket with every element of S vanishes.

    Solved as a null space: stack the real and imaginary parts of
    [e_i, s_j] for each basis element e_i of L, then read the null space
    off an SVD. The returned basis is orthonormal because L's basis is.
    """
    if L.dim_ambient != S.dim_ambient:
        raise DimensionMismatch(
            f"ambient dims differ: {L.dim_ambient} vs {S.dim_ambient}"
        )
    if L.dim_span == 0 or S.dim_span == 0:
        return L
    n = L.dim_ambient
    cols = np.empty((2 * n * n * S.dim_span, L.dim_span))
    for i, e in enumerate(L.basis):
        parts = []
        for s in S.basis:
            br = lie(e, s)
            parts.append(br.real.ravel())
            parts.append(br.imag.ravel())
        cols[:, i] = np.concatenate(parts)
    sv = np.linalg.svd(cols, compute_uv=False)
    vh = np.linalg.svd(cols, full_matrices=False)[2]
    cut = tol.zero_tol * max(1.0, float(sv[0]) if sv.size else 0.0)
    mats = []
    for i in range(vh.shape[0]):
        if i < sv.size and sv[i] > cut:
            continue
        m = np.tensordot(vh[i], L._stacked, axes=1)
        m.setflags(write=False)
        mats.append(m)
    return RealSubspace(dim_ambient=n, basis=tuple(mats))


def commutator_defect(L: RealSubspace) -> tuple[float, tuple[int, int] | None]:
    """Largest bracket norm over basis pairs and the index pair attaining it."""
    best = 0.0
    arg: tuple[int, int] | None = None
    r = L.dim_span
    for i in range(r):
        for j in range(i + 1, r):
            v = spectral_norm(lie(L.basis[i], L.basis[j]))
            if v > best:
                best, arg = v, (i, j)
    return best, arg


def associator_defect(L: RealSubspace) -> tuple[float, tuple[int, int, int] | None]:
    """Largest Jordan associator norm over basis triples, with its indices."""
    best = 0.0
    arg: tuple[int, int, int] | None = None
    r = L.dim_span
    E = L.basis
    for i in range(r):
        for j in range(r):
            left = jordan(E[i], E[j])
            for k in range(r):
                d = jordan(left, E[k]) - jordan(E[i], jordan(E[j], E[k]))
                v = spectral_norm(d)
                if v > best:
                    best, arg = v, (i, j, k)
    return best, arg


def is_commutative(L: RealSubspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether all brackets vanish on L. Requires closure under both products."""
    require_closed(L, jordan)
    require_closed(L, lie)
    defect, _ = commutator_defect(L)
    return defect <= tol.threshold(1.0)


def is_jordan_associative(L: RealSubspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the Jordan associator vanishes on L. Same closure requirements."""
    require_closed(L, jordan)
    require_closed(L, lie)
    defect, _ = associator_defect(L)
    return defect <= tol.threshold(1.0)


def is_semisimple_lie(L: RealSubspace, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Nondegeneracy of the Killing form K(x, y) = Tr(ad_x ad_y) on L.

    Judged by the singular value ratio of the Killing matrix in the
    orthonormal basis: semisimple iff smallest > zero_tol * largest.
    """
    require_closed(L, lie)
    r = L.dim_span
    if r == 0:
        return True
    ad = np.empty((r, r, r))
    for x in range(r):
        for j in range(r):
            ad[x, :, j] = L.coeffs(lie(L.basis[x], L.basis[j]))
    killing = np.einsum("xij,yji->xy", ad, ad)
    sv = np.linalg.svd(killing, compute_uv=False)
    return float(sv[-1]) > tol.zero_tol * float(sv[0])


@dataclass(frozen=True, eq=False)
class GenerationReport:
    """Outcome of a generation experiment from a small set of seeds."""

    generators: tuple[np.ndarray, ...]
    closure_dim: int
    target_dim: int
    generated: bool
    rounds: int
    trajectory: tuple[int, ...]
    closure: RealSubspace


def _is_traceless(m: np.ndarray, tol: Tolerance) -> bool:
    n = m.shape[0]
    return abs(complex(np.trace(m))) <= tol.threshold(hs_norm(m) * math.sqrt(n))


def lie_generate(
    a: np.ndarray,
    b: np.ndarray,
    max_rounds: int | None = None,
    tol: Tolerance = DEFAULT_TOL,
) -> GenerationReport:
    """Bracket closure of span{a, b}.

    Target dimension is n^2 - 1 (the traceless Hermitian space) when both
    generators are traceless, n^2 otherwise. A generic traceless pair
    generates the full target; degenerate pairs simply report generated
    False.
    """
    x = as_matrix(a)
    y = as_matrix(b)
    n = same_dim(x, y)
    closed, rounds, trajectory = _close_rounds(span([x, y]), lie, max_rounds, SPAN_RTOL)
    target = n * n - 1 if (_is_traceless(x, tol) and _is_traceless(y, tol)) else n * n
    return GenerationReport(
        generators=(x, y),
        closure_dim=closed.dim_span,
        target_dim=target,
        generated=closed.dim_span == target,
        rounds=rounds,
        trajectory=tuple(trajectory),
        closure=closed,
    )


def jordan_generate_three(
    a: np.ndarray,
    b: np.ndarray,
    max_rounds: int | None = None,
) -> GenerationReport:
    """Jordan closure of span{a, b, [a, b], I}; target is the full n^2."""
    x = as_matrix(a)
    y = as_matrix(b)
    n = same_dim(x, y)
    seeds = [x, y, lie(x, y), np.eye(n, dtype=complex)]
    closed, rounds, trajectory = _close_rounds(span(seeds), jordan, max_rounds, SPAN_RTOL)
    return GenerationReport(
        generators=(x, y),
        closure_dim=closed.dim_span,
        target_dim=n * n,
        generated=closed.dim_span == n * n,
        rounds=rounds,
        trajectory=tuple(trajectory),
        closure=closed,
    )


@dataclass(frozen=True, eq=False)
class FunctionRepresentation:
    """A commuting associative subalgebra realized as functions on a set.

    ``points[x, i]`` is the value of basis element i at joint-spectrum
    point x and ``projectors[x]`` the orthogonal projector onto that point's
    joint eigenspace. At most dim_ambient points exist.
    """

    subspace: RealSubspace
    points: np.ndarray
    projectors: tuple[np.ndarray, ...]

    @property
    def num_points(self) -> int:
        return len(self.projectors)

    def evaluate(self, m: np.ndarray) -> np.ndarray:
        """Function values Tr(P_x m) / rank(P_x) of an ambient matrix."""
        a = as_matrix(m)
        out = np.empty(self.num_points)
        for x, p in enumerate(self.projectors):
            rank = max(1, round(float(np.real(np.trace(p)))))
            out[x] = float(np.real(np.sum(p * a.T))) / rank
        return out

    def reconstruct(self, i: int) -> np.ndarray:
        """Rebuild basis element i as sum_x points[x, i] * projectors[x]."""
        out = np.zeros((self.subspace.dim_ambient,) * 2, dtype=complex)
        for x, p in enumerate(self.projectors):
            out += self.points[x, i] * p
        return out


def function_representation(L: RealSubspace) -> FunctionRepresentation:
    """Simultaneous diagonalization of a commuting associative subalgebra.

    Diagonalizes a generic random combination of the basis, verifies that it
    diagonalizes every basis element, merges eigencolumns whose joint value
    tuples agree within POINT_MERGE_TOL, and checks that the projector table
    reconstructs each basis element to 1e-8. Retries with a fresh generic
    combination on failure; the internal seeds are fixed, so the output is
    deterministic. Raises NotAssociative when the subalgebra is not
    commuting and associative (also if diagonalization cannot converge).
    """
    try:
        associative = is_jordan_associative(L)
    except NotClosed as exc:
        raise NotAssociative(f"precondition failed: {exc}") from exc
    if not associative:
        raise NotAssociative("subspace is not a commuting, Jordan-associative subalgebra")
    r = L.dim_span
    n = L.dim_ambient
    if r == 0:
        return FunctionRepresentation(subspace=L, points=np.zeros((0, 0)), projectors=())
    stacked = L._stacked
    last_err = math.inf
    for attempt in range(8):
        rng = np.random.default_rng(24251 + attempt)
        c = rng.standard_normal(r)
        _, vec = np.linalg.eigh(np.tensordot(c, stacked, axes=1))
        rot = np.einsum("ak,iab,bl->ikl", vec.conj(), stacked, vec)
        diag = np.einsum("ikk->ik", rot).real
        off = np.abs(rot.copy())
        for k in range(n):
            off[:, k, k] = 0.0
        if float(off.max()) > 1e-10 * max(1.0, float(np.max(np.abs(diag)))):
            continue
        groups: list[list[int]] = []
        reps: list[np.ndarray] = []
        for k in range(n):
            t = diag[:, k]
            for g, rep in enumerate(reps):
                if float(np.max(np.abs(t - rep))) <= POINT_MERGE_TOL:
                    groups[g].append(k)
                    break
            else:
                groups.append([k])
                reps.append(t)
        projectors = []
        for idx in groups:
            cols = vec[:, idx]
            p = cols @ cols.conj().T
            p.setflags(write=False)
            projectors.append(p)
        points = np.stack([diag[:, idx].mean(axis=1) for idx in groups])
        recon = np.einsum("xi,xab->iab", points, np.stack(projectors))
        err = float(np.max(np.linalg.norm(recon - stacked, axis=(1, 2))))
        if err <= 1e-8:
            points.setflags(write=False)
            return FunctionRepresentation(
                subspace=L, points=points, projectors=tuple(projectors)
            )
        last_err = min(last_err, err)
    raise NotAssociative(
        f"joint diagonalization did not converge (best residual {last_err:.3e})"
    )


@dataclass(frozen=True, eq=False)
class PositivityReport:
    """Sampling evidence on positivity behavior of the Jordan product.

    ``jordan_violations`` counts PSD pairs a, b from the subspace whose
    product a o b fails to be PSD. ``square_order_violations`` counts pairs
    a >= b >= 0 whose squares fail a^2 >= b^2. Worst cases carry
    (a, b, min eigenvalue).
    """

    samples: int
    jordan_violations: int
    square_order_violations: int
    worst_jordan: tuple[np.ndarray, np.ndarray, float] | None
    worst_square_order: tuple[np.ndarray, np.ndarray, float] | None

    @property
    def any_violation(self) -> bool:
        return self.jordan_violations > 0 or self.square_order_violations > 0


def check_positivity_closure(
    L: RealSubspace,
    samples: int,
    seed: int,
    tol: Tolerance = DEFAULT_TOL,
) -> PositivityReport:
    """Sample PSD elements of a Jordan-closed subspace and test positivity.

    Candidates are squares x @ x of random basis combinations, so they are
    PSD and stay inside the subspace. Associative subalgebras produce no
    violations; the full Hermitian algebra produces both kinds.
    """
    require_closed(L, jordan)
    r = L.dim_span
    stacked = L._stacked
    jordan_count = 0
    square_count = 0
    worst_jordan: tuple[np.ndarray, np.ndarray, float] | None = None
    worst_square: tuple[np.ndarray, np.ndarray, float] | None = None
    best_j = 0.0
    best_s = 0.0
    for t in range(samples if r > 0 else 0):
        rng = np.random.default_rng(derive_seed(seed, t))
        x = np.tensordot(rng.standard_normal(r), stacked, axes=1)
        y = np.tensordot(rng.standard_normal(r), stacked, axes=1)
        z = np.tensordot(rng.standard_normal(r), stacked, axes=1)
        a = x @ x
        b = y @ y
        lam = float(np.linalg.eigvalsh(jordan(a, b))[0])
        if lam < -tol.threshold(spectral_norm(a) * spectral_norm(b)):
            jordan_count += 1
            if lam < best_j:
                best_j, worst_jordan = lam, (a, b, lam)
        big = b + z @ z
        lam2 = float(np.linalg.eigvalsh(big @ big - b @ b)[0])
        if lam2 < -tol.threshold(spectral_norm(big) ** 2 + spectral_norm(b) ** 2):
            square_count += 1
            if lam2 < best_s:
                best_s, worst_square = lam2, (big, b, lam2)
    return PositivityReport(
        samples=samples,
        jordan_violations=jordan_count,
        square_order_violations=square_count,
        worst_jordan=worst_jordan,
        worst_square_order=worst_square,
    )
