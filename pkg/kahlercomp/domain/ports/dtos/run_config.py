# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, PositiveFloat, PositiveInt, confloat, conint, root_validator


class Command(Enum):
    """
    Verification families that can be run.
    """
    HESSIAN = "hessian"
    RICCATI = "riccati"
    EIGEN = "eigen"
    VOLUME = "volume"
    ALL = "all"


class ChartLabel(Enum):
    """
    Model spaces available in a run.
    """
    FLAT = "flat"
    FUBINI_STUDY = "fubini_study"
    COMPLEX_HYPERBOLIC = "complex_hyperbolic"
    PRODUCT = "product"


# Curvature constant of a chart when it is not specified
DEFAULT_CURVATURES = {
    ChartLabel.FLAT: 0.0,
    ChartLabel.FUBINI_STUDY: 1.0,
    ChartLabel.COMPLEX_HYPERBOLIC: -1.0,
    ChartLabel.PRODUCT: 0.0
}


class SubmanifoldKind(Enum):
    POINT = "point"
    LINEAR = "linear"


class OracleType(Enum):
    """
    Independent computations of the Hessian compared with the Riccati evolution.
    """
    FINITE_DIFFERENCE = "fd"
    JACOBI = "jacobi"


class EigenMode(Enum):
    RADIAL = "radial"
    MESH = "mesh"
    BOCHNER = "bochner"
    ALL = "all"


class ChartConfiguration(BaseModel):
    """
    Configuration of a model space chart.
    """
    label: ChartLabel = Field(default=ChartLabel.FUBINI_STUDY, description="Model space.")
    n: PositiveInt = Field(default=2, description="Complex dimension.")
    K: Optional[float] = Field(
        default=None,
        description="Curvature constant of a space form, 1, 0 or -1 according to the label if not specified. "
        "Ignored for products."
    )
    factors: Optional[List["ChartConfiguration"]] = Field(
        default=None,
        description="Space form factors of a product, whose dimensions add up to n."
    )

    @root_validator(skip_on_failure=True)
    def check_chart(cls, values):
        label = values["label"]
        if values.get("K") is None:
            values["K"] = DEFAULT_CURVATURES[label]
        K = values["K"]
        if label == ChartLabel.FLAT and K != 0 or label == ChartLabel.FUBINI_STUDY and not K > 0 \
                or label == ChartLabel.COMPLEX_HYPERBOLIC and not K < 0:
            raise ValueError(f"curvature constant {K} does not match the {label.value} model")
        if label == ChartLabel.PRODUCT:
            factors = values.get("factors")
            if not factors:
                raise ValueError("a product chart needs factors")
            if any(factor.label == ChartLabel.PRODUCT for factor in factors):
                raise ValueError("the factors of a product must be space forms")
            if sum(factor.n for factor in factors) != values["n"]:
                raise ValueError("the factor dimensions must add up to n")
        return values


ChartConfiguration.update_forward_refs()


class SubmanifoldConfiguration(BaseModel):
    """
    Configuration of the complex submanifold the distance is taken to.
    """
    kind: SubmanifoldKind = Field(default=SubmanifoldKind.POINT, description="Origin or linear subvariety.")
    tangent_indices: List[conint(ge=0)] = Field(
        default=[],
        description="Coordinate directions spanning the linear subvariety through the origin."
    )

    @root_validator(skip_on_failure=True)
    def check_point(cls, values):
        if values["kind"] == SubmanifoldKind.POINT and values["tangent_indices"]:
            raise ValueError("a point has no tangent direction")
        if values["kind"] == SubmanifoldKind.LINEAR and not values["tangent_indices"]:
            raise ValueError("a linear subvariety needs tangent directions")
        return values


class ToleranceConfiguration(BaseModel):
    """
    Tolerance overrides shared by the verdicts.
    """
    abs_tol: PositiveFloat = Field(default=1e-6, description="Absolute tolerance on scalar comparisons.")
    rel_tol: PositiveFloat = Field(default=1e-6, description="Relative tolerance on scalar comparisons.")
    psd_slack: Optional[PositiveFloat] = Field(
        default=None,
        description="Negative eigenvalue admitted in Loewner checks, 1e-5 + 10 step^2 if not specified."
    )


class HessianConfiguration(BaseModel):
    """
    Configuration of a Hessian comparison along a normal geodesic.
    """
    chart: ChartConfiguration = Field(default_factory=ChartConfiguration, description="Ambient space.")
    submanifold: SubmanifoldConfiguration = Field(
        default_factory=SubmanifoldConfiguration,
        description="Submanifold the distance is taken to."
    )
    K_bound: Optional[float] = Field(
        default=None,
        description="Lower bound of the bisectional curvature used in the bound, the chart K if not specified."
    )
    r_min: PositiveFloat = Field(default=0.1, description="First radius of the grid.")
    r_max: PositiveFloat = Field(default=0.9 * np.pi / np.sqrt(2), description="Last radius of the grid.")
    r_points: conint(ge=2) = Field(default=41, description="Number of radii of the grid.")
    eps: PositiveFloat = Field(default=1e-3, description="Distance at which the Riccati evolution is seeded.")
    step: PositiveFloat = Field(default=1e-3, description="Integration step.")
    oracles: List[OracleType] = Field(
        default=[OracleType.FINITE_DIFFERENCE, OracleType.JACOBI],
        description="Oracles compared with the Riccati evolution."
    )
    oracle_points: PositiveInt = Field(default=5, description="Number of radii where the oracles are evaluated.")
    bisectional_points: conint(ge=0) = Field(
        default=10,
        description="Number of chart points probed by the bisectional curvature estimator, 0 to skip it."
    )
    bisectional_samples: PositiveInt = Field(default=1000, description="Random vector pairs per probed point.")

    @root_validator(skip_on_failure=True)
    def check_grid(cls, values):
        if not values["r_max"] > values["r_min"]:
            raise ValueError("r_max must be above r_min")
        if not values["eps"] < values["r_min"]:
            raise ValueError("eps must be below r_min")
        return values

    @property
    def bound_curvature(self) -> float:
        if self.K_bound is not None:
            return self.K_bound
        if self.chart.label == ChartLabel.PRODUCT:
            return min(min(factor.K for factor in self.chart.factors), 0.0)
        return self.chart.K

    @property
    def radii(self) -> List[float]:
        return np.linspace(self.r_min, self.r_max, self.r_points).tolist()


class RiccatiConfiguration(BaseModel):
    """
    Configuration of the randomized suite checking the abstract Riccati comparison.
    """
    instances: PositiveInt = Field(default=200, description="Number of random instances.")
    dim: conint(ge=1, le=4) = Field(default=4, description="Largest dimension of the instances.")
    T: PositiveFloat = Field(default=1.0, description="End time of the instances.")
    step: PositiveFloat = Field(default=1e-3, description="Integration step.")
    t0: PositiveFloat = Field(default=1e-4, description="Seed time of the singular instances.")
    psd_slack: PositiveFloat = Field(default=1e-9, description="Negative eigenvalue admitted in the comparisons.")
    scalar_values: List[float] = Field(
        default=[1.0, 0.0, -1.0],
        description="Constants R of the scalar equations x' = R - x^2 compared with their closed forms."
    )


class EigenConfiguration(BaseModel):
    """
    Configuration of the first eigenvalue checks.
    """
    mode: EigenMode = Field(default=EigenMode.ALL, description="Checks to run.")
    n: PositiveInt = Field(default=2, description="Complex dimension of the radial problem.")
    s: conint(ge=0) = Field(default=1, description="Complex dimension of the subspace P0.")
    K: PositiveFloat = Field(default=1.0, description="Curvature constant of the model space.")
    r0: Optional[PositiveFloat] = Field(
        default=None,
        description="Radius of the Dirichlet problem, the critical radius if not specified."
    )
    resolution: conint(ge=1000) = Field(default=10000, description="Target number of mesh vertices.")
    shooting_tol: PositiveFloat = Field(default=1e-10, description="Width of the final bisection bracket.")


class VolumeConfiguration(BaseModel):
    """
    Configuration of the volume checks.
    """
    n: PositiveInt = Field(default=1, description="Complex dimension of the model.")
    K: PositiveFloat = Field(default=1.0, description="Curvature constant of the model.")
    lambda_values: List[PositiveFloat] = Field(
        default=[1.0, 2.0, 4.0],
        description="Chern factors of the scaling law check."
    )
    k1: PositiveFloat = Field(default=1.0, description="Lower bound of the scalar curvature.")
    k2: PositiveFloat = Field(default=3.0, description="Upper bound of the scalar curvature.")
    band_points: conint(ge=2) = Field(default=11, description="Number of scalar curvatures of the band table.")


class RunConfiguration(BaseModel):
    """
    Complete configuration of a run.
    """
    command: Command = Field(..., description="Verification family to run.")
    suite_seed: conint(ge=0) = Field(default=0, description="Seed of every random stream of the run.")
    output_dir: Optional[str] = Field(default=None, description="Directory where the reports are written.")
    cores: PositiveInt = Field(default=1, description="Number of processes running the jobs.")
    verbose: bool = Field(default=False, description="Log debug messages.")
    rewrite: bool = Field(default=False, description="Overwrite a non empty output directory.")
    tolerance: ToleranceConfiguration = Field(default_factory=ToleranceConfiguration, description="Tolerances.")
    hessian: List[HessianConfiguration] = Field(
        default_factory=lambda: [HessianConfiguration()],
        description="Hessian comparisons."
    )
    riccati: RiccatiConfiguration = Field(default_factory=RiccatiConfiguration, description="Riccati suite.")
    eigen: EigenConfiguration = Field(default_factory=EigenConfiguration, description="Eigenvalue checks.")
    volume: VolumeConfiguration = Field(default_factory=VolumeConfiguration, description="Volume checks.")

    def runs(self, command: Command) -> bool:
        """
        Check if a family is part of the run.
        """
        return self.command in (command, Command.ALL)
