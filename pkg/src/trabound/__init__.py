"""Bound-state spectra and wavefunctions of two four-parameter potentials
via a tridiagonal-representation series and two independent numerical
spectrum solvers (Laguerre-basis matrix diagonalization and the Lagrange
mesh method)."""

__version__ = "0.1.0"

from .potentials import (
    CubicCoefficients,
    Model,
    PotentialSpec,
    SpdLabel,
    SpectrumPhase,
    bound_state_count_bound,
    classify_spectrum,
    critical_cubic,
    eval_potential,
    positive_real_roots,
)
from .solver_hmd import HmdConfig, hmd_spectrum
from .solver_lmm import LmmConfig, lmm_spectrum
from .spectra import SpectrumResult
from .tra import TraBasis, basis_for, wavefunction

__all__ = [
    "__version__",
    "Model",
    "PotentialSpec",
    "CubicCoefficients",
    "SpdLabel",
    "SpectrumPhase",
    "eval_potential",
    "critical_cubic",
    "positive_real_roots",
    "classify_spectrum",
    "bound_state_count_bound",
    "TraBasis",
    "basis_for",
    "wavefunction",
    "HmdConfig",
    "hmd_spectrum",
    "LmmConfig",
    "lmm_spectrum",
    "SpectrumResult",
]
