import numpy as np
import pytest
from scipy.linalg import lu_factor, lu_solve

from trabound.errors import DomainError, NotPositiveDefiniteError
from trabound.linalg import EigenPairs, SymMatrix, generalized_sym_eigen, sym_tridiag_eigen


def test_tridiag_diagonal_matrix():
    pairs = sym_tridiag_eigen([2.0, 2.0], [0.0])
    assert pairs.values == pytest.approx([2.0, 2.0])


def test_tridiag_two_by_two():
    pairs = sym_tridiag_eigen([0.0, 0.0], [1.0])
    assert pairs.values == pytest.approx([-1.0, 1.0], rel=1e-14)


def test_tridiag_zero_coupling():
    pairs = sym_tridiag_eigen([1.0, 2.0, 3.0], [0.0, 0.0])
    assert pairs.values == pytest.approx([1.0, 2.0, 3.0])


def test_tridiag_empty_rejected():
    with pytest.raises(DomainError):
        sym_tridiag_eigen([], [])


def test_tridiag_orthonormal_vectors(rng):
    diag = rng.normal(size=30)
    off = rng.normal(size=29)
    pairs = sym_tridiag_eigen(diag, off)
    assert np.all(np.diff(pairs.values) >= 0)
    assert np.abs(pairs.vectors.T @ pairs.vectors - np.eye(30)).max() < 1e-10


def test_generalized_identity_overlap():
    h = SymMatrix.from_dense([[1.0, 0.0], [0.0, 2.0]])
    omega = SymMatrix.from_dense(np.eye(2))
    pairs = generalized_sym_eigen(h, omega)
    assert pairs.values == pytest.approx([1.0, 2.0])


def test_generalized_two_by_two_hand_solve():
    h = SymMatrix.from_dense([[2.0, 0.0], [0.0, 2.0]])
    omega = SymMatrix.from_dense([[2.0, 0.0], [0.0, 1.0]])
    pairs = generalized_sym_eigen(h, omega)
    assert pairs.values == pytest.approx([1.0, 2.0])


def _inverse_iteration_oracle(h, omega, shifts, iters=200):
    """Shift-inverted power iteration on (H - s Omega)^-1 Omega."""
    out = []
    rng = np.random.default_rng(7)
    for s in shifts:
        lu = lu_factor(h - s * omega)
        v = rng.normal(size=h.shape[0])
        lam = None
        for _ in range(iters):
            v = lu_solve(lu, omega @ v)
            v /= np.linalg.norm(v)
        # Rayleigh quotient in the Omega metric
        lam = (v @ h @ v) / (v @ omega @ v)
        out.append(lam)
    return out


def test_generalized_random_against_inverse_iteration(rng):
    n = 20
    q = rng.normal(size=(n, n))
    omega_arr = q @ q.T + n * np.eye(n)
    h_arr = rng.normal(size=(n, n))
    h_arr = 0.5 * (h_arr + h_arr.T)
    pairs = generalized_sym_eigen(SymMatrix.from_dense(h_arr), SymMatrix.from_dense(omega_arr))
    # probe a few eigenvalues with slightly offset shifts
    for idx in (0, 7, 19):
        want = pairs.values[idx]
        gap = min(abs(want - pairs.values[j]) for j in range(n) if j != idx)
        oracle = _inverse_iteration_oracle(h_arr, omega_arr, [want + 0.1 * gap])[0]
        assert oracle == pytest.approx(want, rel=1e-10, abs=1e-10)


def test_generalized_vectors_omega_orthonormal(rng):
    n = 15
    q = rng.normal(size=(n, n))
    omega_arr = q @ q.T + n * np.eye(n)
    h_arr = rng.normal(size=(n, n))
    h_arr = 0.5 * (h_arr + h_arr.T)
    pairs = generalized_sym_eigen(
        SymMatrix.from_dense(h_arr), SymMatrix.from_dense(omega_arr), check_residuals=True
    )
    gram = pairs.vectors.T @ omega_arr @ pairs.vectors
    assert np.abs(gram - np.eye(n)).max() < 1e-10
    resid = h_arr @ pairs.vectors - omega_arr @ pairs.vectors * pairs.values[None, :]
    assert np.abs(resid).max() <= 1e-8 * np.linalg.norm(h_arr, 2)


def test_generalized_permutation_invariance(rng):
    n = 12
    q = rng.normal(size=(n, n))
    omega_arr = q @ q.T + n * np.eye(n)
    h_arr = rng.normal(size=(n, n))
    h_arr = 0.5 * (h_arr + h_arr.T)
    perm = rng.permutation(n)
    p = np.eye(n)[perm]
    a = generalized_sym_eigen(SymMatrix.from_dense(h_arr), SymMatrix.from_dense(omega_arr))
    b = generalized_sym_eigen(
        SymMatrix.from_dense(p @ h_arr @ p.T), SymMatrix.from_dense(p @ omega_arr @ p.T)
    )
    assert a.values == pytest.approx(b.values, rel=1e-10)


def test_not_positive_definite_reports_minor():
    h = SymMatrix.from_dense(np.eye(3))
    omega = SymMatrix.from_dense([[1.0, 0.0, 0.0], [0.0, 1.0, 2.0], [0.0, 2.0, 1.0]])
    with pytest.raises(NotPositiveDefiniteError) as err:
        generalized_sym_eigen(h, omega)
    assert err.value.minor == 3


def test_sym_matrix_mirrors_lower_triangle():
    m = SymMatrix.from_dense([[1.0, 99.0], [2.0, 3.0]])
    np.testing.assert_allclose(m.array, [[1.0, 2.0], [2.0, 3.0]])
    assert m.order == 2


def test_sym_matrix_from_tridiagonal():
    m = SymMatrix.from_tridiagonal([1.0, 2.0, 3.0], [4.0, 5.0])
    np.testing.assert_allclose(m.array, [[1, 4, 0], [4, 2, 5], [0, 5, 3]])
