# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = "1.0"


class VerdictRecord(BaseModel):
    """
    Loewner verdict of a computed mixed Hessian against its bound at one radius.
    """
    space: str = Field(..., description="Name of the ambient chart.")
    K_bound: float = Field(..., description="Curvature constant of the bound.")
    n: int = Field(..., description="Complex dimension.")
    p: int = Field(..., description="Complex dimension of the submanifold.")
    t: float = Field(..., description="Distance to the submanifold.")
    source: str = Field(..., description="Method used to compute the Hessian.")
    gap_min_eigenvalue: float = Field(..., description="Smallest eigenvalue of bound - computed.")
    holds: bool = Field(..., description="True if the bound holds within psd_slack.")


class EqualityRecord(BaseModel):
    """
    Equality probe along a normal geodesic of a model space.
    """
    max_abs_gap: float
    holo_deviation: float
    tangent_holo_norm: float
    curvature_deviation: float
    equality_holds: bool
    curvature_matches: bool


class HessianSection(BaseModel):
    """
    Result of a Hessian comparison.
    """
    index: int = Field(..., description="Index of the comparison in the configuration.")
    space: str
    submanifold: str
    K_bound: float
    n: int
    p: int
    status: str = Field(..., description="Status of the Riccati evolution.")
    verdicts: List[VerdictRecord]
    holds: bool
    min_gap: Optional[float] = Field(None, description="Smallest gap eigenvalue over the grid.")
    oracle_deviation: Optional[float] = Field(None, description="Largest pairwise deviation between the oracles.")
    oracle_sources: List[str] = []
    integration_order: Optional[float] = None
    congruence_margin: Optional[float] = Field(
        None, description="Smallest eigenvalue of the reduced congruence check over the grid."
    )
    bisectional_min_ratio: Optional[float] = None
    equality: Optional[EqualityRecord] = None
    warnings: List[str] = []


class ScalarCheckRecord(BaseModel):
    R: float
    relative_deviation: float


class RiccatiSection(BaseModel):
    """
    Summary of the randomized Riccati comparison suite.
    """
    suite_seed: int
    instances: int
    failures: int
    hypothesis_violations: int
    worst_margin: Optional[float]
    failing_instances: List[int] = []
    scalar_checks: List[ScalarCheckRecord] = []
    holds: bool


class RadialRecord(BaseModel):
    """
    First Dirichlet eigenvalue of the radial problem on a ball around a subspace.
    """
    n: int
    s: int
    r0: float
    eigenvalue: float
    residual: float
    iterations: int
    critical_radius: float
    expected_eigenvalue: float
    critical_discrepancy: Optional[float] = None
    holds: bool


class MeshRecord(BaseModel):
    """
    First eigenvalue of the sphere mesh Laplacian.
    """
    nb_vertices: int
    eigenvalue: float
    relative_error: float
    level_eigenvalues: List[float]
    level_vertices: List[int]
    convergence_order: Optional[float]
    holds: bool


class BochnerRecord(BaseModel):
    function: str
    eigenvalue: float
    gradient_energy: float
    hessian_energy: float
    ricci_energy: float
    residual: float
    eigen_residual: float
    holds: bool


class EqualityCaseRecord(BaseModel):
    function: str
    uab_norm: float
    phi_variation: float
    equality_observed: bool
    equality_expected: bool


class EigenSection(BaseModel):
    """
    Results of the first eigenvalue checks.
    """
    radial: List[RadialRecord] = []
    complementarity: Optional[float] = Field(
        None, description="Deviation of r0(s) + r0(n - 1 - s) from the distance between the subspaces."
    )
    mesh: Optional[MeshRecord] = None
    bochner: List[BochnerRecord] = []
    equality_cases: List[EqualityCaseRecord] = []
    holds: bool


class VolumeSection(BaseModel):
    """
    Results of the volume checks.
    """
    n: int
    space: str
    V_quadrature: Optional[float]
    V_formula: float
    relative_deviation: Optional[float]
    chern_factor: float
    scalar_min: float
    scalar_max: float
    lambda_values: List[float]
    formula_spread: float
    quadrature_spread: Optional[float]
    k1: float
    k2: float
    V_k1: float
    V_k2: float
    lower_holds: bool
    upper_holds: bool
    rigidity: Optional[str]
    notes: List[str] = []
    holds: bool


class VerificationReport(BaseModel):
    """
    Report of a run, with the resolved configuration it was produced with.
    """
    schema_version: str = SCHEMA_VERSION
    convention_ledger_hash: str
    config: Dict = Field(..., description="Resolved run configuration.")
    hessian: List[HessianSection] = []
    riccati: Optional[RiccatiSection] = None
    eigen: Optional[EigenSection] = None
    volume: Optional[VolumeSection] = None
    failures: List[str] = Field([], description="Description of the failing verdicts.")

    @property
    def holds(self) -> bool:
        return len(self.failures) == 0


class Table(BaseModel):
    """
    Plot-ready table exported as CSV.
    """
    columns: List[str]
    rows: List[List[float]] = []


class MeshGeometry(BaseModel):
    vertices: List[List[float]]
    faces: List[List[int]]
