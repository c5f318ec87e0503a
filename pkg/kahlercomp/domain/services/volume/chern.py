# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import logging
from math import factorial
from typing import Optional, Tuple

import numpy as np

from kahlercomp.domain.exceptions import NonIntegrableChartException
from kahlercomp.domain.models.kahler_chart import KahlerChart
from .quadrature import compact_factors, volume_quadrature, MAXIMUM_QUADRATURE_DIM

logger = logging.getLogger(__name__)

DEFAULT_NB_SAMPLES = 16
# Relative spread under which the scalar curvature is considered constant
CONSTANCY_TOLERANCE = 1e-6


def scalar_curvature_samples(chart: KahlerChart, nb_samples: int = DEFAULT_NB_SAMPLES, seed: int = 0) -> np.ndarray:
    """
    Scalar curvature at the origin and at random points of the chart domain.

    :param chart: Chart.
    :param nb_samples: Number of points.
    :param seed: Seed of the random points.
    :return: The scalar curvatures.
    """
    rng = np.random.default_rng(seed)
    K = chart.curvature_constant
    scale = 0.5 / np.sqrt(abs(K)) if K else 0.5
    points = [np.zeros(chart.complex_dim, dtype=complex)]
    while len(points) < nb_samples:
        point = scale * (rng.standard_normal(chart.complex_dim) + 1j * rng.standard_normal(chart.complex_dim))
        if chart.in_domain(point):
            points.append(point)
    return np.array([chart.scalar_curvature_at(point) for point in points])


def scalar_curvature_range(
    chart: KahlerChart, nb_samples: int = DEFAULT_NB_SAMPLES, seed: int = 0
) -> Tuple[float, float]:
    samples = scalar_curvature_samples(chart, nb_samples, seed)
    return float(np.min(samples)), float(np.max(samples))


def chern_factor(
    chart: KahlerChart, nb_samples: int = DEFAULT_NB_SAMPLES, seed: int = 0, radius: Optional[float] = None
) -> float:
    """
    Factor lambda such that 2 pi c_1 = lambda [omega], equal to the mean scalar curvature divided by n. Its sign is
    the sign of c_1, so that CP^n of curvature constant K > 0 gives (n + 1) K.
    When the sampled scalar curvature is not constant, the volume average is used, obtained by quadrature over the
    whole chart of a compact space or over the polydisk of the given radius, and the sample mean otherwise.

    :param chart: Chart.
    :param nb_samples: Number of scalar curvature samples.
    :param seed: Seed of the samples.
    :param radius: Radius of the polydisk averaged over for non compact charts.
    :return: The Chern factor.
    """
    samples = scalar_curvature_samples(chart, nb_samples, seed)
    mean = float(np.mean(samples))
    if np.max(samples) - np.min(samples) <= CONSTANCY_TOLERANCE * max(1.0, abs(mean)):
        return mean / chart.complex_dim
    integrable = compact_factors(chart) is not None or radius is not None
    if integrable and chart.complex_dim <= MAXIMUM_QUADRATURE_DIM:
        mean = (
            volume_quadrature(chart, radius, integrand=chart.scalar_curvature_at, rel_tol=1e-6)
            / volume_quadrature(chart, radius, rel_tol=1e-6)
        )
        logger.warning(f"Scalar curvature of {chart.name} is not constant, volume average {mean:.9f} used")
    else:
        logger.warning(f"Scalar curvature of {chart.name} is not constant, sample mean {mean:.9f} used")
    return mean / chart.complex_dim


def chern_number(chart: KahlerChart) -> float:
    """
    Integral of c_1^n over a compact model space: (n + 1)^n for CP^n, and for a product of projective spaces
    n! prod (n_i + 1)^n_i / n_i!.

    :raise NonIntegrableChartException if the chart does not cover a compact model space.
    """
    factors = compact_factors(chart)
    if factors is None:
        raise NonIntegrableChartException(chart.name)
    value = factorial(chart.complex_dim)
    for factor in factors:
        value *= (factor.complex_dim + 1) ** factor.complex_dim / factorial(factor.complex_dim)
    return float(value)
