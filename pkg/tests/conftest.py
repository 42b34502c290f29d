import numpy as np
import pytest

from trabound import HmdConfig, LmmConfig, PotentialSpec, hmd_spectrum, lmm_spectrum
from trabound.reference import TABLE_I, TABLE_II


@pytest.fixture(scope="session")
def bench_spec_i():
    return PotentialSpec(model="I", a=1.0, A=1.0, B=100.0, C=2.0)


@pytest.fixture(scope="session")
def bench_spec_ii():
    return PotentialSpec(model="II", a=1.0, A=1.0, B=100.0, C=2.0)


@pytest.fixture(scope="session")
def hmd_i(bench_spec_i):
    config = HmdConfig.for_spec(
        bench_spec_i, basis_size=TABLE_I.hmd_basis_size, lam=TABLE_I.hmd_lambda
    )
    return hmd_spectrum(bench_spec_i, config), config


@pytest.fixture(scope="session")
def hmd_ii(bench_spec_ii):
    config = HmdConfig.for_spec(
        bench_spec_ii, basis_size=TABLE_II.hmd_basis_size, lam=TABLE_II.hmd_lambda
    )
    return hmd_spectrum(bench_spec_ii, config), config


@pytest.fixture(scope="session")
def lmm_i(bench_spec_i):
    config = LmmConfig(mesh_size=TABLE_I.lmm_mesh_size, h=TABLE_I.lmm_h)
    return lmm_spectrum(bench_spec_i, config), config


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
