"""Pydantic request/response models for the solver service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class PotentialParams(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    model: Literal["I", "II"]
    a: float = Field(default=1.0, gt=0)
    A: float = 1.0
    B: float = 1.0
    C: float = 1.0


class SolverKnobs(BaseModel):
    """Optional solver overrides; defaults come from the benchmark settings."""

    model_config = ConfigDict(populate_by_name=True)

    method: Literal["hmd", "lmm", "both"] = "hmd"
    M: Optional[int] = Field(default=None, ge=1)
    lam: Optional[float] = Field(default=None, gt=0, alias="lambda")
    h: Optional[float] = Field(default=None, gt=0)
    quad_points: Optional[int] = Field(default=None, ge=1)


class GridSpec(BaseModel):
    x_min: float = Field(default=0.0, ge=0)
    x_max: Optional[float] = Field(default=None, gt=0)
    points: int = Field(default=1000, ge=2)


class RangeSpec(BaseModel):
    start: float
    stop: float
    num: int = Field(default=50, ge=2)


class SpectrumRequest(BaseModel):
    potential: PotentialParams
    solver: SolverKnobs = SolverKnobs()


class MethodSpectrum(BaseModel):
    method: Literal["hmd", "lmm"]
    energies: list[float]
    basis_size: int
    scale: float
    n_states: int
    n_positive: int


class SpectrumResponse(BaseModel):
    potential: PotentialParams
    results: list[MethodSpectrum]
    capacity: Optional[int] = None


class WavefunctionRequest(BaseModel):
    potential: PotentialParams
    solver: SolverKnobs = SolverKnobs()
    grid: GridSpec = GridSpec()


class StateWavefunction(BaseModel):
    k: int
    energy: float
    values: list[float]


class WavefunctionResponse(BaseModel):
    potential: PotentialParams
    method: Literal["hmd", "lmm"]
    x: list[float]
    states: list[StateWavefunction]


class PotentialCurveRequest(BaseModel):
    model: Literal["I", "II"]
    a: float = Field(default=1.0, gt=0)
    A: float = Field(default=1.0, gt=0)
    b_over_a_values: list[float] = Field(min_length=1)
    c_over_a: float
    grid: GridSpec = GridSpec(x_min=0.05, x_max=10.0, points=500)


class PotentialCurve(BaseModel):
    b_over_a: float
    values: list[float]


class PotentialCurveResponse(BaseModel):
    model: Literal["I", "II"]
    c_over_a: float
    x_over_a: list[float]
    curves: list[PotentialCurve]


class SpdScanRequest(BaseModel):
    model: Literal["I", "II"]
    a: float = Field(default=1.0, gt=0)
    A: float = Field(default=1.0, gt=0)
    b_over_a: RangeSpec
    c_over_a: RangeSpec


class SpdScanResponse(BaseModel):
    model: Literal["I", "II"]
    b_over_a: list[float]
    c_over_a: list[float]
    labels: list[list[str]]
    positive_root_counts: list[list[int]]


class ClassifyRequest(BaseModel):
    potential: PotentialParams


class ClassifyResponse(BaseModel):
    potential: PotentialParams
    label: str
    positive_root_count: int
    well_depth_negative: bool


class CompareRequest(BaseModel):
    potential: PotentialParams
    solver: SolverKnobs = SolverKnobs(method="both")


class CompareRow(BaseModel):
    k: int
    e_hmd: float
    e_lmm: float
    abs_diff: float
    rel_diff: float
    ref_hmd: Optional[float] = None
    ref_lmm: Optional[float] = None
    rel_err_hmd: Optional[float] = None
    rel_err_lmm: Optional[float] = None
    passed: Optional[bool] = None


class CompareResponse(BaseModel):
    potential: PotentialParams
    rows: list[CompareRow]
    has_reference: bool
    all_passed: bool


class HealthResponse(BaseModel):
    status: str
    version: str
