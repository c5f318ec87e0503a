# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import List

import numpy as np
from scipy import linalg

from .chart import KahlerChart, SpaceLabel
from .space_form import SpaceFormChart


class ProductChart(KahlerChart):
    """
    Riemannian product of space form charts, with block diagonal metric.
    Coordinates of the factors are concatenated in the order of the factor list.
    """

    def __init__(self, factors: List[SpaceFormChart]):
        """
        Initialize the chart.

        :param factors: Charts of the factors.
        """
        super().__init__(sum(factor.complex_dim for factor in factors), SpaceLabel.PRODUCT)
        self.factors = list(factors)
        # Coordinate slice of each factor
        self.factor_slices = []
        start = 0
        for factor in self.factors:
            self.factor_slices.append(slice(start, start + factor.complex_dim))
            start += factor.complex_dim

    @property
    def name(self) -> str:
        return f"product({','.join(factor.name for factor in self.factors)})"

    def potential(self, z: np.ndarray) -> float:
        return sum(factor.potential(z[block]) for factor, block in zip(self.factors, self.factor_slices))

    def in_domain(self, z: np.ndarray) -> bool:
        return all(factor.in_domain(z[block]) for factor, block in zip(self.factors, self.factor_slices))

    def metric_array(self, z: np.ndarray) -> np.ndarray:
        return linalg.block_diag(
            *[factor.metric_array(z[block]) for factor, block in zip(self.factors, self.factor_slices)]
        )

    def metric_derivatives(self, z: np.ndarray) -> np.ndarray:
        n = self.complex_dim
        derivatives = np.zeros((n, n, n), dtype=complex)
        for factor, block in zip(self.factors, self.factor_slices):
            derivatives[block, block, block] = factor.metric_derivatives(z[block])
        return derivatives

    def metric_second_derivatives(self, z: np.ndarray) -> np.ndarray:
        n = self.complex_dim
        derivatives = np.zeros((n, n, n, n), dtype=complex)
        for factor, block in zip(self.factors, self.factor_slices):
            derivatives[block, block, block, block] = factor.metric_second_derivatives(z[block])
        return derivatives

    def volume_density(self, points: np.ndarray) -> np.ndarray:
        points = np.asarray(points, dtype=complex).reshape(-1, self.complex_dim)
        density = np.ones(points.shape[0])
        for factor, block in zip(self.factors, self.factor_slices):
            density = density * factor.volume_density(points[:, block])
        return density
