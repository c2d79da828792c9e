"""Jordan and Lie products on Hermitian matrices, with identity checkers.

Conventions: the Jordan product is the symmetrized matrix product
``a o b = (ab + ba) / 2`` and the bracket carries a factor i/2,
``[a, b] = (i/2)(ab - ba)``, so both products return Hermitian matrices.
Textbook su(n) structure constants must be rescaled before comparison
against this bracket.

Each ``check_*`` function evaluates one algebraic identity on concrete
operands and reports the residual (operator norm of the defect) together
with the threshold it was judged against. Thresholds scale with the product
of the operand norms, one factor per slot of the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotInSpan
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, same_dim, spectral_norm

__all__ = [
    "jordan",
    "lie",
    "associator",
    "recover_associative",
    "IdentityReport",
    "check_jacobi",
    "check_leibniz",
    "check_associator_identity",
    "check_weak_associativity",
    "check_norm_axioms",
    "jordan_commute",
]


def jordan(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Symmetrized product (ab + ba) / 2."""
    x = as_matrix(a)
    y = as_matrix(b)
    same_dim(x, y)
    return 0.5 * (x @ y + y @ x)


def lie(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hermitian-valued bracket (i/2)(ab - ba)."""
    x = as_matrix(a)
    y = as_matrix(b)
    same_dim(x, y)
    return 0.5j * (x @ y - y @ x)


def associator(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Jordan associator (a o b) o c - a o (b o c)."""
    return jordan(jordan(a, b), c) - jordan(a, jordan(b, c))


def recover_associative(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Ordinary matrix product rebuilt from the two Hermitian products.

    ab = a o b - i [a, b]; the checkers never need this, but it pins the
    sign and scaling of the bracket convention.
    """
    return jordan(a, b) - 1j * lie(a, b)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity evaluation on concrete operands."""

    name: str
    residual: float
    threshold: float
    passed: bool


def _report(name: str, defect: np.ndarray, scale: float, tol: Tolerance) -> IdentityReport:
    residual = spectral_norm(defect)
    threshold = tol.threshold(scale)
    return IdentityReport(name=name, residual=residual, threshold=threshold, passed=residual <= threshold)


def check_jacobi(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> IdentityReport:
    """[[a,b],c] + [[b,c],a] + [[c,a],b] = 0."""
    defect = lie(lie(a, b), c) + lie(lie(b, c), a) + lie(lie(c, a), b)
    scale = spectral_norm(a) * spectral_norm(b) * spectral_norm(c)
    return _report("jacobi", defect, scale, tol)


def check_leibniz(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> IdentityReport:
    """[a, b o c] = [a, b] o c + b o [a, c]."""
    defect = lie(a, jordan(b, c)) - jordan(lie(a, b), c) - jordan(b, lie(a, c))
    scale = spectral_norm(a) * spectral_norm(b) * spectral_norm(c)
    return _report("leibniz", defect, scale, tol)


def check_associator_identity(
    a: np.ndarray, b: np.ndarray, c: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> IdentityReport:
    """(a o b) o c - a o (b o c) = [b, [c, a]]."""
    defect = associator(a, b, c) - lie(b, lie(c, a))
    scale = spectral_norm(a) * spectral_norm(b) * spectral_norm(c)
    return _report("associator-identity", defect, scale, tol)


def check_weak_associativity(
    a: np.ndarray, b: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> IdentityReport:
    """(a^2 o b) o a = a^2 o (b o a), with a^2 = a o a."""
    sq = jordan(a, a)
    defect = jordan(jordan(sq, b), a) - jordan(sq, jordan(b, a))
    na = spectral_norm(a)
    scale = na**3 * spectral_norm(b)
    return _report("weak-associativity", defect, scale, tol)


def check_norm_axioms(
    a: np.ndarray, b: np.ndarray, tol: Tolerance = DEFAULT_TOL
) -> IdentityReport:
    """Operator-norm axioms of the symmetrized product.

    Checks submultiplicativity ||a o b|| <= ||a|| ||b||, the square identity
    ||a^2|| = ||a||^2, and positivity dominance ||a^2|| <= ||a^2 + b^2||.
    The residual is the worst signed violation; negative slack passes.
    """
    na = spectral_norm(a)
    nb = spectral_norm(b)
    sq_a = jordan(a, a)
    sq_b = jordan(b, b)
    v_sub = spectral_norm(jordan(a, b)) - na * nb
    v_square = abs(spectral_norm(sq_a) - na * na)
    v_dominance = spectral_norm(sq_a) - spectral_norm(sq_a + sq_b)
    residual = max(v_sub, v_square, v_dominance)
    scale = max(na * nb, na * na, nb * nb)
    threshold = tol.threshold(scale)
    return IdentityReport(
        name="norm-axioms",
        residual=residual,
        threshold=threshold,
        passed=residual <= threshold,
    )


def jordan_commute(a, b, ambient, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the Jordan multiplication operators of a and b commute.

    Tests a o (b o e) = b o (a o e) on every basis element e of the ambient
    subspace. Equivalent to [a, b] = 0 whenever the ambient space is closed
    under the products. Raises NotInSpan when a or b leaves the ambient span.
    """
    x = as_matrix(a)
    y = as_matrix(b)
    n = same_dim(x, y)
    if ambient.dim_ambient != n:
        raise DimensionMismatch(
            f"ambient dimension {ambient.dim_ambient} does not match operands of dim {n}"
        )
    for label, m in (("a", x), ("b", y)):
        if not ambient.contains(m):
            raise NotInSpan(f"operand {label} is not in the ambient subspace")
    threshold = tol.threshold(spectral_norm(x) * spectral_norm(y))
    for e in ambient.basis:
        defect = jordan(x, jordan(y, e)) - jordan(y, jordan(x, e))
        if spectral_norm(defect) > threshold:
            return False
    return True
