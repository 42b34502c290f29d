"""Dense symmetric / symmetric-tridiagonal eigensolvers and the
generalized symmetric-definite problem H v = E Omega v.

The generalized solve reduces through an explicit Cholesky factorization
of the overlap (reporting the failing leading minor on breakdown) and
delegates the standard symmetric eigenproblem to LAPACK.  Returned
vectors are Omega-orthonormal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal, eigh, solve_triangular
from scipy.linalg.lapack import dpotrf

from .errors import DomainError, NotPositiveDefiniteError

__all__ = ["SymMatrix", "EigenPairs", "sym_tridiag_eigen", "generalized_sym_eigen"]


@dataclass(frozen=True)
class SymMatrix:
    """Dense symmetric matrix; symmetry is exact by construction
    (the lower triangle is mirrored on build)."""

    array: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.array, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] == 0:
            raise DomainError("empty matrix")
        lower = np.tril(a)
        object.__setattr__(self, "array", lower + lower.T - np.diag(np.diag(a)))

    @classmethod
    def from_dense(cls, a) -> "SymMatrix":
        return cls(np.array(a, dtype=float))

    @classmethod
    def from_tridiagonal(cls, diag, offdiag) -> "SymMatrix":
        diag = np.asarray(diag, dtype=float)
        offdiag = np.asarray(offdiag, dtype=float)
        if offdiag.size != diag.size - 1:
            raise DomainError("offdiag length must be diag length - 1")
        a = np.diag(diag)
        idx = np.arange(diag.size - 1)
        a[idx, idx + 1] = offdiag
        a[idx + 1, idx] = offdiag
        return cls(a)

    @property
    def order(self) -> int:
        return self.array.shape[0]


@dataclass(frozen=True)
class EigenPairs:
    """Ascending eigenvalues with matching (ortho- or Omega-orthonormal)
    column eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray


def sym_tridiag_eigen(diag, offdiag) -> EigenPairs:
    """Eigendecomposition of a symmetric tridiagonal matrix."""
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    if diag.size == 0:
        raise DomainError("empty tridiagonal matrix")
    if offdiag.size != diag.size - 1:
        raise DomainError("offdiag length must be diag length - 1")
    if diag.size == 1:
        return EigenPairs(diag.copy(), np.array([[1.0]]))
    values, vectors = eigh_tridiagonal(diag, offdiag)
    return EigenPairs(values, vectors)


def generalized_sym_eigen(
    h: SymMatrix, omega: SymMatrix, check_residuals: bool = False
) -> EigenPairs:
    """Solve H v = E Omega v for symmetric H and positive-definite Omega.

    Factor Omega = L L^T, solve the standard problem for L^-1 H L^-T and
    map vectors back through L^-T; the result satisfies
    X^T Omega X = I.  ``check_residuals`` additionally verifies
    ||H v - E Omega v|| <= 1e-8 ||H|| per pair and raises on violation.
    """
    if h.order != omega.order:
        raise DomainError("H and Omega must have the same order")
    c, info = dpotrf(omega.array, lower=1, overwrite_a=0)
    if info > 0:
        raise NotPositiveDefiniteError(info)
    if info < 0:
        raise DomainError(f"illegal argument {-info} passed to dpotrf")
    L = np.tril(c)
    y = solve_triangular(L, h.array, lower=True)
    reduced = solve_triangular(L, y.T, lower=True)
    reduced = 0.5 * (reduced + reduced.T)
    values, vecs = eigh(reduced)
    vectors = solve_triangular(L.T, vecs, lower=False)
    if check_residuals:
        resid = h.array @ vectors - (omega.array @ vectors) * values[None, :]
        h_norm = np.linalg.norm(h.array, 2)
        worst = np.abs(resid).max(axis=0) / np.linalg.norm(vectors, axis=0)
        if np.any(worst > 1e-8 * h_norm):
            raise DomainError(
                f"generalized eigen residual too large: {worst.max():.3e} "
                f"vs bound {1e-8 * h_norm:.3e}"
            )
    return EigenPairs(values, vectors)
