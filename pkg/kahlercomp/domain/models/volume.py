# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import List, Optional, Tuple

import numpy as np

# Relative difference under which a volume is considered equal to a bound
RIGIDITY_TOLERANCE = 1e-6
RIGIDITY_MESSAGE = "rigidity case: holomorphically isometric to CP^n with a Fubini-Study metric"


class VolumeReport:
    """
    Volume of a compact model chart computed by quadrature and from its Chern factor.

    :param n: Complex dimension.
    :param chart_name: Name of the chart.
    :param V_quadrature: Volume by quadrature, None when only the formula path is available.
    :param V_formula: Volume from the Chern factor.
    :param chern_factor: Factor lambda such that 2 pi c_1 = lambda [omega].
    :param scalar_range: Smallest and largest sampled scalar curvatures.
    :param notes: Remarks on the computation paths.
    """

    def __init__(
        self, n: int, chart_name: str, V_quadrature: Optional[float], V_formula: float, chern_factor: float,
        scalar_range: Tuple[float, float], notes: List[str] = None
    ):
        self.n = n
        self.chart_name = chart_name
        self.V_quadrature = V_quadrature
        self.V_formula = V_formula
        self.chern_factor = chern_factor
        self.scalar_range = scalar_range
        self.notes = notes if notes is not None else []

    @property
    def relative_deviation(self) -> Optional[float]:
        if self.V_quadrature is None:
            return None
        return abs(self.V_quadrature - self.V_formula) / self.V_formula

    def __repr__(self):
        return (
            f"VolumeReport(n={self.n}, chart={self.chart_name}, V_quadrature={self.V_quadrature}, "
            f"V_formula={self.V_formula}, chern_factor={self.chern_factor})"
        )


class ScalingLawReport:
    """
    Volumes of CP^n for several Chern factors, with the products V lambda^n that the scaling law keeps constant.
    """

    def __init__(
        self, n: int, lambda_values: List[float], formula_volumes: List[float],
        quadrature_volumes: Optional[List[float]] = None
    ):
        """
        Initialize the report.

        :param n: Complex dimension.
        :param lambda_values: Chern factors.
        :param formula_volumes: Volumes from the formula path.
        :param quadrature_volumes: Volumes by quadrature, None if not computed.
        """
        self.n = n
        self.lambda_values = list(lambda_values)
        self.formula_volumes = list(formula_volumes)
        self.quadrature_volumes = None if quadrature_volumes is None else list(quadrature_volumes)

    def _products(self, volumes: List[float]) -> np.ndarray:
        return np.array(volumes) * np.array(self.lambda_values) ** self.n

    @staticmethod
    def _spread(products: np.ndarray) -> float:
        return float((np.max(products) - np.min(products)) / np.mean(products))

    @property
    def formula_products(self) -> List[float]:
        return self._products(self.formula_volumes).tolist()

    @property
    def formula_spread(self) -> float:
        return self._spread(self._products(self.formula_volumes))

    @property
    def quadrature_products(self) -> Optional[List[float]]:
        if self.quadrature_volumes is None:
            return None
        return self._products(self.quadrature_volumes).tolist()

    @property
    def quadrature_spread(self) -> Optional[float]:
        if self.quadrature_volumes is None:
            return None
        return self._spread(self._products(self.quadrature_volumes))

    @property
    def path_deviation(self) -> Optional[float]:
        """
        Largest relative difference between the quadrature and the formula volumes.
        """
        if self.quadrature_volumes is None:
            return None
        return max(
            abs(quadrature - formula) / formula
            for quadrature, formula in zip(self.quadrature_volumes, self.formula_volumes)
        )

    def __repr__(self):
        return (
            f"ScalingLawReport(n={self.n}, lambda_values={self.lambda_values}, "
            f"formula_spread={self.formula_spread:.3e}, "
            f"quadrature_spread={self.quadrature_spread})"
        )


class VolumeComparisonVerdict:
    """
    Two-sided comparison V_k2(CP^n) <= V <= V_k1(CP^n) of the volume of a manifold whose scalar curvature lies in
    [k1, k2] with the volumes of CP^n of constant scalar curvature k1 and k2.
    """

    def __init__(self, n: int, k1: float, k2: float, V: float, V_k1: float, V_k2: float):
        """
        Initialize the verdict.

        :param n: Complex dimension.
        :param k1: Lower scalar curvature.
        :param k2: Upper scalar curvature.
        :param V: Compared volume.
        :param V_k1: Volume of CP^n of scalar curvature k1, the upper bound.
        :param V_k2: Volume of CP^n of scalar curvature k2, the lower bound.
        """
        self.n = n
        self.k1 = k1
        self.k2 = k2
        self.V = V
        self.V_k1 = V_k1
        self.V_k2 = V_k2

    @staticmethod
    def _equal(first: float, second: float) -> bool:
        return abs(first - second) <= RIGIDITY_TOLERANCE * max(abs(first), abs(second))

    @property
    def lower_equality(self) -> bool:
        return self._equal(self.V, self.V_k2)

    @property
    def upper_equality(self) -> bool:
        return self._equal(self.V, self.V_k1)

    @property
    def lower_holds(self) -> bool:
        return self.V_k2 <= self.V or self.lower_equality

    @property
    def upper_holds(self) -> bool:
        return self.V <= self.V_k1 or self.upper_equality

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds

    @property
    def rigidity(self) -> Optional[str]:
        if self.holds and (self.lower_equality or self.upper_equality):
            return RIGIDITY_MESSAGE
        return None

    def __repr__(self):
        return (
            f"VolumeComparisonVerdict(n={self.n}, k1={self.k1}, k2={self.k2}, V={self.V}, V_k1={self.V_k1}, "
            f"V_k2={self.V_k2}, holds={self.holds})"
        )


class VolumeBand:
    """
    Volume interval allowed by a two-sided bound on the Chern factor.

    :param n: Complex dimension.
    :param lower: Smallest volume.
    :param upper: Largest volume.
    :param negative_case: True for manifolds with negative first Chern class.
    """

    def __init__(self, n: int, lower: float, upper: float, negative_case: bool = False):
        self.n = n
        self.lower = lower
        self.upper = upper
        self.negative_case = negative_case

    def contains(self, V: float) -> bool:
        return self.lower * (1 - RIGIDITY_TOLERANCE) <= V <= self.upper * (1 + RIGIDITY_TOLERANCE)

    def __repr__(self):
        return f"VolumeBand(n={self.n}, lower={self.lower}, upper={self.upper}, negative_case={self.negative_case})"
