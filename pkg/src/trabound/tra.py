"""Tridiagonal-representation machinery: basis assignment, three-term
recursion coefficients, the recursion-defined polynomial families (plain
and hyperbolic variants), expansion coefficients, and the finite-series
bound-state wavefunctions.

For each model the square-integrable basis is
phi_n(y) = (y-1)^alpha (y+1)^(-beta) Q_n^(mu,nu)(y) with a model-specific
coordinate map y(x), chosen so the wave operator acts tridiagonally.  The
wave equation then reduces to a three-term recursion for the expansion
coefficients F_n, whose rescaled form G_n F_n obeys exactly the recursion
of the polynomial family evaluated at an energy-dependent argument; both
routes are implemented and cross-checked in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.integrate import quad

from .errors import BranchPointError, DomainError, NoBoundStatesError, QuadratureError
from .orthopoly import _jacobi_q_table
from .potentials import Model, PotentialSpec, eval_potential

__all__ = [
    "TraBasis",
    "RecursionCoeffs",
    "Branch",
    "TraPolyArgs",
    "WavefunctionSeries",
    "basis_for",
    "recursion_coeffs",
    "tra_poly_args",
    "tra_poly",
    "tra_poly_sequence",
    "expansion_coeffs",
    "g_weight",
    "g_weights",
    "wavefunction",
    "tridiagonality_check",
    "w_overlap",
    "l2_normalized",
]

GAMMA_SQUARED = 1.0 / 16.0


@dataclass(frozen=True)
class TraBasis:
    """Basis parameters for one potential model.

    nmax is the largest integer strictly below -(mu+nu+1)/2, so that
    mu + nu < -2 nmax - 1 holds with strict inequality; capacity = nmax+1
    is the maximum number of representable bound states.
    """

    model: Model
    mu: float
    nu: float
    alpha: float
    beta: float
    nmax: int

    @property
    def capacity(self) -> int:
        return self.nmax + 1


def basis_for(spec: PotentialSpec) -> TraBasis:
    """Assign Jacobi and basis-exponent parameters from the couplings.

    Model I: mu = sqrt(2A + 1/4), nu = -sqrt(2B + 1), 2 alpha = mu + 1/2,
    2 beta = -nu - 1.  Model II: mu = sqrt(2A + 1), nu = -sqrt(2B + 1/4),
    2 alpha = mu + 1, 2 beta = -nu - 1/2.
    """
    if not (spec.A > 0 and spec.B > 0):
        raise DomainError("series solution requires A > 0 and B > 0")
    if spec.model is Model.I:
        mu = math.sqrt(2 * spec.A + 0.25)
        nu = -math.sqrt(2 * spec.B + 1.0)
        alpha = (mu + 0.5) / 2.0
        beta = (-nu - 1.0) / 2.0
    else:
        mu = math.sqrt(2 * spec.A + 1.0)
        nu = -math.sqrt(2 * spec.B + 0.25)
        alpha = (mu + 1.0) / 2.0
        beta = (-nu - 0.5) / 2.0
    # largest integer strictly less than -(mu+nu+1)/2
    nmax = math.ceil(-(mu + nu + 1.0) / 2.0) - 1
    if nmax < 0:
        raise NoBoundStatesError(
            f"no representable bound states for A={spec.A}, B={spec.B} "
            f"(mu+nu = {mu + nu:.6f} >= -1)"
        )
    return TraBasis(spec.model, mu, nu, alpha, beta, nmax)


@dataclass(frozen=True)
class RecursionCoeffs:
    """Coefficients of d_n F_n + b_{n-1} F_{n-1} + c_n F_{n+1} = 0.

    d has nmax+1 entries; b and c have nmax entries (n = 0..nmax-1).
    favard_positive records whether b_n c_n > 0 held for every n < nmax,
    the positivity condition under which the F_n form orthogonal
    polynomials of the energy variable.
    """

    d: np.ndarray
    b: np.ndarray
    c: np.ndarray
    epsilon: float
    gamma2: float = GAMMA_SQUARED
    favard_positive: bool = field(default=True)


def recursion_coeffs(basis: TraBasis, epsilon: float, c_coupling: float) -> RecursionCoeffs:
    """Three-term recursion coefficients at dimensionless energy epsilon = a^2 E."""
    if epsilon == 0.0:
        raise DomainError("epsilon = 0 is the scattering threshold, not a bound state")
    mu, nu, s = basis.mu, basis.nu, basis.mu + basis.nu
    n = np.arange(basis.nmax + 1, dtype=float)
    if basis.model is Model.I:
        d = (0.5 * ((2 * n + s + 1) ** 2 - 0.25) + epsilon - 2 * c_coupling) / epsilon
    else:
        d = ((2 * n + s + 1) ** 2 - 0.25 - (2 * c_coupling + epsilon)) / epsilon
    d = d + (nu * nu - mu * mu) / ((2 * n + s) * (2 * n + s + 2))
    m = n[:-1]
    b = 2 * (m + 1) * (m + s + 1) / ((2 * m + s + 1) * (2 * m + s + 2))
    c = 2 * (m + mu + 1) * (m + nu + 1) / ((2 * m + s + 2) * (2 * m + s + 3))
    return RecursionCoeffs(
        d=d, b=b, c=c, epsilon=float(epsilon), favard_positive=bool(np.all(b * c > 0))
    )


class Branch(str, Enum):
    HYPERBOLIC = "hyperbolic"
    TRIGONOMETRIC = "trigonometric"


@dataclass(frozen=True)
class TraPolyArgs:
    """Argument z and angle theta of the recursion-defined polynomials.

    theta is recovered on the positive branch (sinh theta >= 0, or
    theta in [0, pi] so sin theta >= 0); any global sign ambiguity only
    flips the overall sign of the unnormalized wavefunction.
    """

    z: float
    theta: float
    branch: Branch

    @property
    def cos_like(self) -> float:
        if self.branch is Branch.HYPERBOLIC:
            return math.cosh(self.theta)
        return math.cos(self.theta)

    @property
    def sin_like(self) -> float:
        if self.branch is Branch.HYPERBOLIC:
            return math.sinh(self.theta)
        return math.sin(self.theta)


def tra_poly_args(basis: TraBasis, epsilon: float, c_coupling: float) -> TraPolyArgs:
    """Map (epsilon, C) to the polynomial argument and branch.

    Model I is always hyperbolic for epsilon < 0 < C.  Model II is
    hyperbolic on -C < epsilon < 0 and trigonometric below -C; the two
    formulas diverge at epsilon = -C, which is refused.
    """
    C = c_coupling
    if not C > 0:
        raise DomainError(f"polynomial argument map requires C > 0, got {C}")
    if not epsilon < 0:
        raise DomainError(f"bound states need epsilon < 0, got {epsilon}")
    if basis.model is Model.I:
        z2 = 1.0 / (C * (C - epsilon))
        cosh_t = (epsilon - 2 * C) / epsilon
        if cosh_t < 1.0:
            raise DomainError(f"internal inconsistency: cosh theta = {cosh_t} < 1")
        return TraPolyArgs(math.sqrt(z2), math.acosh(cosh_t), Branch.HYPERBOLIC)
    if abs(epsilon + C) < 1e-12 * C:
        raise BranchPointError(f"epsilon = {epsilon} sits on the branch point -C = {-C}")
    ratio = (epsilon + 2 * C) / (-epsilon)
    if epsilon > -C:
        z2 = 4.0 / (C * (C + epsilon))
        if ratio < 1.0:
            raise DomainError(f"internal inconsistency: cosh theta = {ratio} < 1")
        return TraPolyArgs(math.sqrt(z2), math.acosh(ratio), Branch.HYPERBOLIC)
    z2 = -4.0 / (C * (C + epsilon))
    if abs(ratio) > 1.0:
        raise DomainError(f"internal inconsistency: |cos theta| = {abs(ratio)} > 1")
    return TraPolyArgs(math.sqrt(z2), math.acos(ratio), Branch.TRIGONOMETRIC)


def tra_poly_sequence(
    args: TraPolyArgs, basis: TraBasis, gamma: float = 0.25, nmax: int | None = None
) -> np.ndarray:
    """Values of the recursion-defined polynomials for n = 0..nmax.

    Forward recursion seeded by 1 (and 0 for the n = -1 term), solved for
    the (n+1)-th member.  The hyperbolic branch uses cosh/sinh in place of
    cos/sin; gamma enters only through gamma^2 = 1/16.
    """
    if nmax is None:
        nmax = basis.nmax
    mu, nu, s = basis.mu, basis.nu, basis.mu + basis.nu
    cos_v, sin_v = args.cos_like, args.sin_like
    out = np.empty(nmax + 1)
    out[0] = 1.0
    for n in range(nmax):
        lead = 2.0 * (n + 1) * (n + s + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
        if lead == 0.0:
            raise DomainError(
                f"vanishing recursion coefficient at n={n} (degenerate mu+nu)"
            )
        diag = ((n + (s + 1) / 2.0) ** 2 - gamma * gamma) * args.z * sin_v
        diag -= (nu * nu - mu * mu) / ((2 * n + s) * (2 * n + s + 2))
        sub = (
            2.0 * (n + mu) * (n + nu) / ((2 * n + s) * (2 * n + s + 1)) * out[n - 1]
            if n >= 1
            else 0.0
        )
        out[n + 1] = ((diag - cos_v) * out[n] - sub) / lead
    return out


def tra_poly(n: int, args: TraPolyArgs, basis: TraBasis, gamma: float = 0.25) -> float:
    """Single polynomial value H_n (trigonometric) or its hyperbolic twin."""
    if not 0 <= n <= basis.nmax:
        raise DomainError(f"n={n} outside 0..{basis.nmax}")
    return float(tra_poly_sequence(args, basis, gamma, nmax=n)[n])


def expansion_coeffs(coeffs: RecursionCoeffs) -> np.ndarray:
    """F_n from the three-term recursion with F_0 = 1 (b_{-1} = 0)."""
    nmax = coeffs.d.size - 1
    if np.any(coeffs.c == 0.0):
        raise DomainError("vanishing c_n: recursion cannot be advanced")
    F = np.empty(nmax + 1)
    F[0] = 1.0
    for n in range(nmax):
        prev = coeffs.b[n - 1] * F[n - 1] if n >= 1 else 0.0
        F[n + 1] = -(coeffs.d[n] * F[n] + prev) / coeffs.c[n]
    return F


def g_weights(basis: TraBasis) -> np.ndarray:
    """Rescaling factors G_n with P_n = G_n F_n, n = 0..nmax.

    G_n = (mu+1)_n (nu+1)_n / [n! (mu+nu+1)_n] * (mu+nu+1)/(2n+mu+nu+1),
    accumulated as a running product of Pochhammer ratios.
    """
    mu, nu, s = basis.mu, basis.nu, basis.mu + basis.nu
    out = np.empty(basis.nmax + 1)
    out[0] = 1.0
    poch = 1.0
    for k in range(1, basis.nmax + 1):
        denom = k * (s + k)
        if denom == 0.0 or (2 * k + s + 1) == 0.0:
            raise DomainError(f"Pochhammer denominator vanishes at n={k}")
        poch *= (mu + k) * (nu + k) / denom
        out[k] = poch * (s + 1.0) / (2 * k + s + 1.0)
    return out


def g_weight(n: int, basis: TraBasis) -> float:
    if not 0 <= n <= basis.nmax:
        raise DomainError(f"n={n} outside 0..{basis.nmax}")
    return float(g_weights(basis)[n])


def coordinate_map(spec: PotentialSpec, x):
    """y(x): (x/a)^2 + 1 for model I, 2 (x/a + 1)^2 - 1 for model II."""
    r = np.asarray(x, dtype=float) / spec.a
    if spec.model is Model.I:
        return r * r + 1.0
    return 2.0 * (r + 1.0) ** 2 - 1.0


def _prefactor(spec: PotentialSpec, basis: TraBasis, x: np.ndarray) -> np.ndarray:
    r = x / spec.a
    if spec.model is Model.I:
        return r ** (basis.mu + 0.5) * (r * r + 2.0) ** ((basis.nu + 1.0) / 2.0)
    scale = 2.0 ** ((basis.mu + basis.nu) / 2.0 + 0.75)
    return (
        scale
        * (r + 1.0) ** (basis.nu + 0.5)
        * (r * r + 2.0 * r) ** ((basis.mu + 1.0) / 2.0)
    )


@dataclass(frozen=True)
class WavefunctionSeries:
    """Finite-series bound state: expansion data plus its sampled values.

    coeffs are the series coefficients (polynomial value over G_n, i.e.
    the F_n themselves); the overall constant f0 is a free normalization
    fixed to 1, so the wavefunction is unnormalized.
    """

    basis: TraBasis
    energy: float
    coeffs: np.ndarray
    node_index: int
    normalization: float = 1.0


def wavefunction(spec: PotentialSpec, energy: float, x_grid, node_index: int | None = None):
    """Sample the unnormalized k-th bound-state series on x_grid >= 0.

    energy is E_k in atomic units (epsilon = a^2 E_k must be negative);
    it normally comes from one of the numerical solvers.  Returns the
    series object together with the sampled values.
    """
    x = np.asarray(x_grid, dtype=float)
    if np.any(x < 0):
        raise DomainError("wavefunction grid must satisfy x >= 0")
    if not energy < 0:
        raise DomainError(f"bound-state energy must be negative, got {energy}")
    basis = basis_for(spec)
    epsilon = spec.a**2 * energy
    args = tra_poly_args(basis, epsilon, spec.C)
    coeffs = tra_poly_sequence(args, basis) / g_weights(basis)
    y = coordinate_map(spec, x)
    table = _jacobi_q_table(basis.nmax, basis.mu, basis.nu, y)
    values = _prefactor(spec, basis, x) * (coeffs @ table)
    if node_index is None:
        interior = values[(x > 0) & (np.abs(values) > 0)]
        node_index = int(np.sum(np.sign(interior[:-1]) != np.sign(interior[1:])))
    series = WavefunctionSeries(basis, float(energy), coeffs, node_index)
    return series, values


def l2_normalized(x: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Optional L2 normalization of sampled values by trapezoidal quadrature."""
    norm = math.sqrt(np.trapezoid(values**2, x))
    if norm == 0.0:
        raise DomainError("cannot normalize an identically zero sample")
    return values / norm


def _phi_and_second_derivative(basis: TraBasis, spec: PotentialSpec, n: int, y: float):
    """phi_n and d^2 phi_n / dx^2 at one interior point, from the analytic
    differential relations of the Jacobi family plus the chain rule."""
    mu, nu, s = basis.mu, basis.nu, basis.mu + basis.nu
    alpha, beta = basis.alpha, basis.beta
    q = _jacobi_q_table(n + 1, mu, nu, y)[:, 0]
    qn = q[n]
    qm1 = q[n - 1] if n >= 1 else 0.0
    qp1 = q[n + 1]
    y2m1 = y * y - 1.0
    # first derivative of Q_n
    dq = (
        2.0
        * (n + s + 1)
        * (
            (nu - mu) * n / ((2 * n + s) * (2 * n + s + 2)) * qn
            - (n + mu) * (n + nu) / ((2 * n + s) * (2 * n + s + 1)) * qm1
            + n * (n + 1) / ((2 * n + s + 1) * (2 * n + s + 2)) * qp1
        )
        / y2m1
    )
    # second derivative from the hypergeometric differential equation
    ddq = (n * (n + s + 1) * qn - ((s + 2) * y + mu - nu) * dq) / y2m1
    w = (y - 1.0) ** alpha * (y + 1.0) ** (-beta)
    lam = alpha / (y - 1.0) - beta / (y + 1.0)
    phi = w * qn
    phi_y = w * (lam * qn + dq)
    phi_yy = w * (
        (lam * lam - alpha / (y - 1.0) ** 2 + beta / (y + 1.0) ** 2) * qn
        + 2.0 * lam * dq
        + ddq
    )
    a = spec.a
    if spec.model is Model.I:
        dydx2 = 4.0 * (y - 1.0) / a**2
        d2ydx2 = 2.0 / a**2
    else:
        dydx2 = 8.0 * (y + 1.0) / a**2
        d2ydx2 = 4.0 / a**2
    phi_xx = dydx2 * phi_yy + d2ydx2 * phi_y
    return phi, phi_xx


def _x_of_y(spec: PotentialSpec, y: float) -> float:
    if spec.model is Model.I:
        return spec.a * math.sqrt(y - 1.0)
    return spec.a * (math.sqrt((y + 1.0) / 2.0) - 1.0)


def _dx_dy(spec: PotentialSpec, y: float) -> float:
    if spec.model is Model.I:
        return spec.a / (2.0 * math.sqrt(y - 1.0))
    return spec.a / (2.0 * math.sqrt(2.0 * (y + 1.0)))


def tridiagonality_check(
    spec: PotentialSpec, n: int, m: int, epsilon: float = -1.0
) -> float:
    """Quadrature value of <phi_m | D | phi_n> for the wave operator
    D = -1/2 d^2/dx^2 + V - E at dimensionless energy epsilon.

    Entries with |n - m| >= 2 must vanish (within quadrature accuracy
    relative to the diagonal); the diagonal equals d_n times the weighted
    norm from :func:`w_overlap`.  Evaluated as an integral over y, with
    basis derivatives taken analytically.
    """
    basis = basis_for(spec)
    if not (0 <= n <= basis.nmax and 0 <= m <= basis.nmax):
        raise DomainError(f"indices must lie in 0..{basis.nmax}")
    if spec.model is Model.II and abs(epsilon + spec.C) < 1e-12 * spec.C:
        epsilon = -0.5 * spec.C
    energy = epsilon / spec.a**2

    def integrand(y):
        phi_n, phi_n_xx = _phi_and_second_derivative(basis, spec, n, y)
        phi_m, _ = _phi_and_second_derivative(basis, spec, m, y)
        x = _x_of_y(spec, y)
        v = eval_potential(spec, x)
        return phi_m * (-0.5 * phi_n_xx + (v - energy) * phi_n) * _dx_dy(spec, y)

    value, err = quad(integrand, 1.0, np.inf, limit=400, epsabs=1e-12, epsrel=1e-11)
    if not math.isfinite(value):
        raise QuadratureError(f"wave-operator integral diverged for (n, m)=({n}, {m})")
    return float(value)


def w_overlap(spec: PotentialSpec, n: int, epsilon: float = -1.0) -> float:
    """Weighted norm int phi_n W phi_n dx with W = -E/(y+1) (model I) or
    -E/(y-1) (model II); the delta-orthogonality weight of the basis."""
    basis = basis_for(spec)
    if not 0 <= n <= basis.nmax:
        raise DomainError(f"n must lie in 0..{basis.nmax}")
    energy = epsilon / spec.a**2

    def integrand(y):
        phi_n, _ = _phi_and_second_derivative(basis, spec, n, y)
        w = -energy / (y + 1.0) if spec.model is Model.I else -energy / (y - 1.0)
        return phi_n * w * phi_n * _dx_dy(spec, y)

    value, err = quad(integrand, 1.0, np.inf, limit=400, epsabs=1e-12, epsrel=1e-11)
    if not math.isfinite(value):
        raise QuadratureError(f"weighted-norm integral diverged for n={n}")
    return float(value)
