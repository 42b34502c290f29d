"""The two four-parameter potentials: evaluation, critical-point cubics,
spectral-phase classification and the bound-state counting integral.

Both potentials live on the half line x > 0, carry an inverse-square
singularity at the origin and vanish at infinity.  Atomic units throughout
(hbar = m = 1); energies therefore scale as 1/a^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .errors import DomainError

__all__ = [
    "Model",
    "PotentialSpec",
    "CubicCoefficients",
    "SpectrumPhase",
    "SpdLabel",
    "eval_potential",
    "critical_cubic",
    "positive_real_roots",
    "critical_points",
    "classify_spectrum",
    "negative_region",
    "bound_state_count_bound",
]


class Model(str, Enum):
    I = "I"
    II = "II"


class SpectrumPhase(str, Enum):
    SCATTERING = "scattering"
    BOUND_ONLY = "bound"
    BOUND_AND_RESONANCE = "bound+resonance"


@dataclass(frozen=True)
class PotentialSpec:
    """One of the two potential models with its four parameters.

    ``a`` is the length scale (> 0); A, B, C are dimensionless couplings.
    Evaluation and classification accept any real A, B, C; the series
    solution additionally needs A > 0 and B > 0.
    """

    model: Model
    a: float = 1.0
    A: float = 1.0
    B: float = 1.0
    C: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        if not self.a > 0:
            raise DomainError(f"length scale a must be positive, got {self.a}")


@dataclass(frozen=True)
class CubicCoefficients:
    """Coefficients (cubic first) of the critical-point cubic in the
    substituted variable: s = (x/a)^2 for model I, t = (x/a + 1)^2 - 1
    for model II."""

    c3: float
    c2: float
    c1: float
    c0: float

    def as_array(self) -> np.ndarray:
        return np.array([self.c3, self.c2, self.c1, self.c0])


@dataclass(frozen=True)
class SpdLabel:
    """Spectral-phase classification of one parameter point."""

    label: SpectrumPhase
    positive_root_count: int
    well_depth_negative: bool


def eval_potential(spec: PotentialSpec, x, form: str = "compact"):
    """Evaluate V(x) for x > 0 (scalar or array).

    ``form`` selects between the two algebraically identical expressions
    ("compact" nested form or "expanded" partial fractions); they agree to
    rounding and both are exposed so tests can cross-check them.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("potential is singular at the origin; require x > 0")
    a, A, B, C = spec.a, spec.A, spec.B, spec.C
    if spec.model is Model.I:
        if form == "compact":
            u = x * x + 2 * a * a
            v = (2.0 / u) * (a * a * A / (x * x) - a * a * B / u + C)
        else:
            u = x * x + 2 * a * a
            v = A / (x * x) + (2 * C - A) / u - 2 * a * a * B / u**2
    else:
        if form == "compact":
            w = x * (x + 2 * a)
            v = (1.0 / w) * (a * a * A / w - a * a * B / (x + a) ** 2 + C)
        else:
            v = (
                (A / 4) / (x * x)
                + (2 * C - 2 * B - A) / (2 * x * (x + 2 * a))
                + (A / 4) / (x + 2 * a) ** 2
                + B / (x + a) ** 2
            )
    return float(v) if v.ndim == 0 else v


def critical_cubic(spec: PotentialSpec) -> CubicCoefficients:
    """Cubic whose positive roots locate the interior critical points of V."""
    A, B, C = spec.A, spec.B, spec.C
    if spec.model is Model.I:
        return CubicCoefficients(C, 2 * (C - B + A), 6 * A, 4 * A)
    return CubicCoefficients(C, 2 * (C - B + A), C - B + 4 * A, 2 * A)


def sign_change_count(coeffs) -> int:
    """Descartes sign changes of a coefficient sequence (zeros skipped)."""
    signs = [c for c in coeffs if c != 0.0]
    return sum(1 for p, q in zip(signs, signs[1:]) if p * q < 0)


def positive_real_roots(cubic: CubicCoefficients, rel_tol: float = 1e-10) -> list[float]:
    """Positive real roots of the cubic, ascending.

    Roots come from companion-matrix eigenvalues (numpy.roots); a root
    counts as real when its imaginary part is below ``rel_tol`` relative
    to its magnitude.  Degenerate (lower-degree) cases are handled by
    dropping the vanishing leading coefficients.
    """
    coeffs = cubic.as_array()
    scale = np.max(np.abs(coeffs))
    if scale == 0.0:
        return []
    nz = np.nonzero(np.abs(coeffs) > 1e-300)[0]
    roots = np.roots(coeffs[nz[0]:]) if len(nz) else np.array([])
    out = [
        float(r.real)
        for r in roots
        if r.real > 0 and abs(r.imag) <= rel_tol * abs(r)
    ]
    return sorted(out)


def _root_to_x(spec: PotentialSpec, root: float) -> float:
    """Map a cubic root (in s or t) back to the coordinate x0 > 0."""
    if spec.model is Model.I:
        return spec.a * math.sqrt(root)
    return spec.a * (math.sqrt(root + 1.0) - 1.0)


def critical_points(spec: PotentialSpec) -> list[float]:
    """Interior critical points x0 > 0 of V, ascending."""
    return [_root_to_x(spec, r) for r in positive_real_roots(critical_cubic(spec))]


def classify_spectrum(spec: PotentialSpec) -> SpdLabel:
    """Classify the parameter point into scattering / bound / bound+resonance.

    Follows the sign-of-C and root-count rules: C < 0 with a single
    positive root and a negative well is purely bound; C > 0 with two
    positive roots and a negative minimum admits bound states plus
    resonances; everything else scatters.  The well-depth test V(x0) < 0
    is necessary but possibly not sufficient, and is recorded as a field.
    A three-root point (not covered by the two-root discussion) is judged
    by its deepest minimum; the root count in the label flags it.
    """
    xs = critical_points(spec)
    count = len(xs)
    if count == 0:
        return SpdLabel(SpectrumPhase.SCATTERING, 0, False)
    depth = min(eval_potential(spec, x) for x in xs)
    negative = bool(depth < 0.0)
    C = spec.C
    if negative and ((C < 0 and count == 1) or (C > 0 and count in (2, 3))):
        label = SpectrumPhase.BOUND_ONLY if C < 0 else SpectrumPhase.BOUND_AND_RESONANCE
        return SpdLabel(label, count, negative)
    return SpdLabel(SpectrumPhase.SCATTERING, count, negative)


def negative_region(spec: PotentialSpec, xtol: float = 1e-12):
    """Sign-change brackets (x_minus, x_plus) of V around its negative well.

    Returns None when V never goes negative at a critical point.  The
    brackets are located by bisection started from the critical points
    (the potential is monotone between them).
    """
    xs = critical_points(spec)
    if not xs:
        return None
    vals = [eval_potential(spec, x) for x in xs]
    if min(vals) >= 0.0:
        return None
    i_min = int(np.argmin(vals))
    x_min = xs[i_min]

    # walk left towards the positive wall at the origin
    lo = x_min
    while eval_potential(spec, lo) < 0:
        lo *= 0.5
        if lo < 1e-280:
            raise DomainError("no positive barrier found towards the origin")
    x_minus = brentq(lambda t: eval_potential(spec, t), lo, x_min, xtol=xtol)

    # walk right: next critical point with V > 0, else expand outwards
    hi = None
    for x, v in zip(xs[i_min + 1:], vals[i_min + 1:]):
        if v > 0:
            hi = x
            break
    if hi is None:
        hi = 2 * x_min
        while eval_potential(spec, hi) < 0:
            hi *= 2.0
            if hi > 1e280:
                return (x_minus, math.inf)
    x_plus = brentq(lambda t: eval_potential(spec, t), x_min, hi, xtol=xtol)
    return (x_minus, x_plus)


def bound_state_count_bound(spec: PotentialSpec) -> float:
    """Upper bound on the number of bound states from int x V^-(x) dx.

    V^- is the negative part of V.  Finite only for C > 0, where the
    negative region is bracketed by the sign changes of V; for C <= 0 the
    integral diverges and a DomainError is raised.  Requires A > 0 so the
    origin contributes a positive wall.
    """
    if spec.C <= 0:
        raise DomainError("counting integral diverges for C <= 0 (unbounded)")
    if spec.A <= 0:
        raise DomainError("counting integral needs a repulsive core (A > 0)")
    bracket = negative_region(spec)
    if bracket is None:
        return 0.0
    x_minus, x_plus = bracket
    value, err = quad(
        lambda t: -t * eval_potential(spec, t),
        x_minus,
        x_plus,
        epsabs=1e-8,
        epsrel=1e-10,
        limit=200,
    )
    return float(value)
