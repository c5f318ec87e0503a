# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import Callable, Optional

import numpy as np

from .chart import KahlerChart, SpaceLabel, DEFAULT_METRIC_STEP, DEFAULT_CURVATURE_STEP

# Relative asymmetry admitted on curvature slices obtained by nested finite differences
FINITE_DIFFERENCE_ASYMMETRY_TOLERANCE = 1e-6


class PotentialChart(KahlerChart):
    """
    Chart defined by an arbitrary Kahler potential, with metric and curvature obtained by finite differences.
    """

    def __init__(
        self, complex_dim: int, potential: Callable[[np.ndarray], float],
        domain: Optional[Callable[[np.ndarray], bool]] = None, metric_step: float = DEFAULT_METRIC_STEP,
        curvature_step: float = DEFAULT_CURVATURE_STEP
    ):
        """
        Initialize the chart.

        :param complex_dim: Complex dimension n.
        :param potential: Kahler potential, a real function of a complex array of shape (n,).
        :param domain: Predicate on chart points. All points are admitted if None.
        :param metric_step: Finite difference step of the metric.
        :param curvature_step: Finite difference step of the metric derivatives.
        """
        super().__init__(
            complex_dim, SpaceLabel.POTENTIAL, metric_step=metric_step, curvature_step=curvature_step,
            asymmetry_tolerance=FINITE_DIFFERENCE_ASYMMETRY_TOLERANCE
        )
        self._potential = potential
        self._domain = domain

    def potential(self, z: np.ndarray) -> float:
        return float(self._potential(z))

    def in_domain(self, z: np.ndarray) -> bool:
        if self._domain is None:
            return True
        return bool(self._domain(z))


def perturbed_space_form_potential(K: float, delta: float) -> Callable[[np.ndarray], float]:
    """
    Potential of a space form deformed by a quartic term: log(1 + K |z|^2) / K + delta |z|^4.

    :param K: Curvature constant of the undeformed space form.
    :param delta: Size of the deformation.
    :return: The potential function.
    """
    def potential(z: np.ndarray) -> float:
        squared_norm = float(np.real(np.vdot(z, z)))
        base = squared_norm if K == 0 else np.log1p(K * squared_norm) / K
        return float(base + delta * squared_norm ** 2)
    return potential
