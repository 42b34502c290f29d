"""Jacobi polynomials on y >= 1, Laguerre polynomials, their zeros and
Gauss-Laguerre quadrature.

The Jacobi family Q_n^(mu,nu) lives on the semi-infinite interval with
weight (y-1)^mu (y+1)^nu; it is a finite family, orthogonal only for
n <= N with mu > -1 and mu + nu < -2N - 1.  Normalization carries the
leading factor Gamma(n+mu+1) / [Gamma(n+1) Gamma(mu+1)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln, gammasgn

from .errors import DomainError

__all__ = [
    "JacobiParams",
    "QuadratureRule",
    "jacobi_q",
    "jacobi_q_norm",
    "laguerre",
    "laguerre_normalized_table",
    "laguerre_zeros",
    "gauss_laguerre",
]


@dataclass(frozen=True)
class JacobiParams:
    """Parameters (mu, nu) and cutoff N of a finite Jacobi family."""

    mu: float
    nu: float
    nmax: int

    def __post_init__(self):
        if self.nmax < 0:
            raise DomainError(f"nmax must be >= 0, got {self.nmax}")
        if not self.mu > -1:
            raise DomainError(f"require mu > -1, got mu={self.mu}")
        if not self.mu + self.nu < -2 * self.nmax - 1:
            raise DomainError(
                f"require mu + nu < -2*nmax - 1, got mu+nu={self.mu + self.nu} "
                f"with nmax={self.nmax}"
            )


def _jacobi_q_table(nmax: int, mu: float, nu: float, y) -> np.ndarray:
    """Rows Q_0..Q_nmax at points y via the forward three-term recursion.

    Purely formal evaluation: no family constraints are enforced, which the
    internal derivative/tridiagonality machinery relies on (it needs one
    index past the orthogonal family).
    """
    y = np.atleast_1d(np.asarray(y, dtype=float))
    s = mu + nu
    out = np.empty((nmax + 1, y.size))
    out[0] = 1.0
    if nmax >= 1:
        out[1] = (mu + 1.0) + (s + 2.0) * (y - 1.0) / 2.0
    for n in range(1, nmax):
        a_n = (nu * nu - mu * mu) / ((2 * n + s) * (2 * n + s + 2))
        b_n = 2.0 * (n + mu) * (n + nu) / ((2 * n + s) * (2 * n + s + 1))
        c_n = 2.0 * (n + 1) * (n + s + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
        out[n + 1] = ((y - a_n) * out[n] - b_n * out[n - 1]) / c_n
    return out


def jacobi_q(n: int, params: JacobiParams, y):
    """Q_n^(mu,nu)(y) for 0 <= n <= nmax (scalar or array y)."""
    if not 0 <= n <= params.nmax:
        raise DomainError(f"n={n} outside the finite family 0..{params.nmax}")
    y_arr = np.asarray(y, dtype=float)
    vals = _jacobi_q_table(n, params.mu, params.nu, y_arr)[n]
    return float(vals[0]) if y_arr.ndim == 0 else vals


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == round(x)


def jacobi_q_norm(n: int, params: JacobiParams) -> float:
    """Squared norm int_1^inf (y-1)^mu (y+1)^nu Q_n^2 dy, Gamma closed form.

    Evaluated through log-Gamma with sign tracking since nu (and hence
    several Gamma arguments) is a negative non-integer for every basis this
    package builds.  Strictly positive for valid parameters.
    """
    if not 0 <= n <= params.nmax:
        raise DomainError(f"n={n} outside the finite family 0..{params.nmax}")
    mu, nu = params.mu, params.nu
    s = mu + nu
    gamma_args = (n + mu + 1.0, n + nu + 1.0, -n - s, n + 1.0, -nu, nu + 1.0)
    for arg in gamma_args:
        if _is_nonpositive_integer(arg):
            raise DomainError(f"Gamma pole at argument {arg} in the norm formula")
    log_mag = (
        (s + 1) * math.log(2.0)
        - math.log(abs(2 * n + s + 1))
        + gammaln(gamma_args[0])
        + gammaln(gamma_args[1])
        + gammaln(gamma_args[2])
        - gammaln(gamma_args[3])
        - gammaln(gamma_args[4])
        - gammaln(gamma_args[5])
    )
    sign = (
        (-1.0) ** (n + 1)
        * math.copysign(1.0, 2 * n + s + 1)
        * gammasgn(gamma_args[0])
        * gammasgn(gamma_args[1])
        * gammasgn(gamma_args[2])
        * gammasgn(gamma_args[4])
        * gammasgn(gamma_args[5])
    )
    return sign * math.exp(log_mag)


def laguerre(m: int, sigma: float, z):
    """Generalized Laguerre polynomial L_m^sigma(z) by forward recursion."""
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    z = np.asarray(z, dtype=float)
    prev = np.ones_like(z)
    if m == 0:
        return float(prev[()]) if z.ndim == 0 else prev
    cur = sigma + 1.0 - z
    for k in range(1, m):
        prev, cur = cur, ((2 * k + sigma + 1 - z) * cur - (k + sigma) * prev) / (k + 1)
    return float(cur[()]) if z.ndim == 0 else cur


def laguerre_normalized_table(nmax: int, sigma: float, z: np.ndarray) -> np.ndarray:
    """Rows of orthonormal Laguerre values C_n L_n^sigma(z), n = 0..nmax,
    where C_n = sqrt(n! / Gamma(n+sigma+1))."""
    z = np.asarray(z, dtype=float)
    out = np.empty((nmax + 1, z.size))
    out[0] = math.exp(-0.5 * gammaln(sigma + 1.0))
    if nmax >= 1:
        out[1] = (sigma + 1.0 - z) * out[0] / math.sqrt(sigma + 1.0)
    for n in range(1, nmax):
        a = (2 * n + sigma + 1 - z) / math.sqrt((n + 1) * (n + sigma + 1))
        b = math.sqrt(n * (n + sigma) / ((n + 1) * (n + sigma + 1)))
        out[n + 1] = a * out[n] - b * out[n - 1]
    return out


def _laguerre_pair_scaled(m: int, sigma: float, z: np.ndarray):
    """(L_{m-1}, L_m) at points z with joint per-point rescaling.

    Only ratios of the two values are meaningful; rescaling keeps the
    forward recursion inside float64 range for large m and z (needed at
    mesh sizes of a few thousand).
    """
    z = np.asarray(z, dtype=float)
    prev = np.ones_like(z)
    cur = sigma + 1.0 - z
    for k in range(1, m):
        prev, cur = cur, ((2 * k + sigma + 1 - z) * cur - (k + sigma) * prev) / (k + 1)
        big = np.abs(cur) > 1e250
        if np.any(big):
            prev[big] *= 1e-250
            cur[big] *= 1e-250
    return prev, cur


def laguerre_zeros(m_points: int) -> np.ndarray:
    """All zeros of L_M (sigma = 0), ascending.

    Eigenvalues of the symmetric tridiagonal Jacobi matrix followed by one
    Newton polish per root, using x L_M' = M (L_M - L_{M-1}).
    """
    if m_points < 1:
        raise DomainError(f"need at least one point, got {m_points}")
    if m_points == 1:
        return np.array([1.0])
    i = np.arange(m_points)
    x = eigh_tridiagonal(
        2.0 * i + 1.0, np.arange(1.0, m_points), eigvals_only=True
    )
    prev, cur = _laguerre_pair_scaled(m_points, 0.0, x)
    dcur = m_points * (cur - prev) / x
    x = x - cur / dcur
    return np.sort(x)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for the weight z^sigma e^-z on (0, inf)."""

    nodes: np.ndarray
    weights: np.ndarray
    sigma: float
    m_points: int = field(default=0)

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "m_points", int(nodes.size))
        if nodes.size != weights.size:
            raise DomainError("nodes and weights must have matching length")
        if np.any(nodes <= 0) or np.any(np.diff(nodes) <= 0):
            raise DomainError("nodes must be strictly increasing and positive")
        if np.any(weights <= 0):
            raise DomainError("weights must be positive (underflow at this order?)")


def gauss_laguerre(m_points: int, sigma: float = 0.0) -> QuadratureRule:
    """Gauss-Laguerre rule of order M at weight order sigma (Golub-Welsch).

    Nodes are Jacobi-matrix eigenvalues; weights come from the first
    components of its orthonormal eigenvectors scaled by Gamma(sigma+1),
    which stays finite where the factorial formulas long overflowed.
    The extreme weights themselves still leave the eigensolver's range
    somewhere beyond order ~25 (they scale like e^{-4M}); construction
    then fails with a DomainError rather than returning zero weights.
    """
    if m_points < 1:
        raise DomainError(f"need at least one point, got {m_points}")
    if sigma <= -1:
        raise DomainError(f"weight order must exceed -1, got {sigma}")
    i = np.arange(m_points)
    diag = 2.0 * i + sigma + 1.0
    off = -np.sqrt(np.arange(1.0, m_points) * (np.arange(1.0, m_points) + sigma))
    if m_points == 1:
        nodes, vecs = np.array([sigma + 1.0]), np.array([[1.0]])
    else:
        nodes, vecs = eigh_tridiagonal(diag, off)
    weights = math.exp(gammaln(sigma + 1.0)) * vecs[0] ** 2
    return QuadratureRule(nodes=nodes, weights=weights, sigma=sigma)


def laguerre_orthonormal_eigentable(m_points: int, sigma: float):
    """Nodes x_i and the orthogonal table U with U[n, i] = sqrt(w_i) * C_n L_n^sigma(x_i).

    This is the numerically safe form of the Golub-Welsch data: the
    off-diagonal signs of the Jacobi matrix follow the true orthonormal
    recursion, so eigenvector components reproduce the weighted polynomial
    values including their signs.
    """
    i = np.arange(m_points)
    diag = 2.0 * i + sigma + 1.0
    off = -np.sqrt(np.arange(1.0, m_points) * (np.arange(1.0, m_points) + sigma))
    nodes, vecs = eigh_tridiagonal(diag, off)
    vecs = vecs * np.sign(vecs[0])
    return nodes, vecs
