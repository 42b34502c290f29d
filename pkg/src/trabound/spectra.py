"""Shared result container for the two spectrum solvers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SpectrumResult:
    """Sorted bound-state energies with solver provenance.

    energies holds the negative eigenvalues ascending (deepest first);
    vectors are the matching overlap-orthonormal eigenvector columns.
    n_positive counts the discarded discretized-continuum eigenvalues.
    scale is the method's length/inverse-length parameter (h or lambda).
    """

    energies: np.ndarray
    vectors: np.ndarray
    method: str
    basis_size: int
    scale: float
    n_positive: int

    @property
    def n_states(self) -> int:
        return int(self.energies.size)
