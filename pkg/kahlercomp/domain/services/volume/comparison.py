# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Volume identities of compact Kahler manifolds whose first Chern class is proportional to the Kahler class.
If 2 pi c_1 = lambda [omega], then V = (2 pi)^n |int c_1^n| / (n! |lambda|^n) in the normalization where the volume
density is 2^n det g, and in particular V(omega) = V(omega_0) / lambda^n when lambda [omega_0] = 2 pi c_1.
"""

import logging
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from kahlercomp.domain.exceptions import ScalarCurvatureRangeException, NonIntegrableChartException
from kahlercomp.domain.models.kahler_chart import KahlerChart, SpaceFormChart
from kahlercomp.domain.models.volume import VolumeReport, ScalingLawReport, VolumeComparisonVerdict, VolumeBand
from .chern import chern_factor, chern_number, scalar_curvature_range
from .quadrature import compact_factors, volume_quadrature, MAXIMUM_QUADRATURE_DIM

logger = logging.getLogger(__name__)

# Volume of CP^n with 2 pi c_1 = [omega], that is with curvature constant K = 1 / (n + 1)
PINNED_BASE_VOLUMES: Dict[int, float] = {
    1: 4 * np.pi,
    2: 18 * np.pi ** 2,
    3: 256 * np.pi ** 3 / 3
}


def volume_formula(n: int, factor: float, chern_integral: Optional[float] = None) -> float:
    """
    Volume of a compact Kahler manifold with 2 pi c_1 = +-factor [omega].

    :param n: Complex dimension.
    :param factor: Chern factor lambda, non zero. Its sign is ignored.
    :param chern_integral: Integral of c_1^n, (n + 1)^n as for CP^n if None.
    :return: The volume.
    :raise ScalarCurvatureRangeException if the factor is zero.
    """
    if factor == 0:
        raise ScalarCurvatureRangeException(factor, factor)
    chern_integral = (n + 1) ** n if chern_integral is None else chern_integral
    return float((2 * np.pi) ** n * abs(chern_integral) / (factorial(n) * abs(factor) ** n))


def base_volume(n: int) -> float:
    """
    Volume of CP^n with Chern factor 1, pinned for n <= 3.
    """
    if n in PINNED_BASE_VOLUMES:
        return PINNED_BASE_VOLUMES[n]
    return volume_formula(n, 1.0)


def constant_scalar_volume(n: int, k: float) -> float:
    """
    Volume V_k(CP^n) of CP^n with the Fubini-Study metric of constant scalar curvature k > 0, whose Chern factor is
    k / n.

    :raise ScalarCurvatureRangeException if k is not strictly positive.
    """
    if not k > 0:
        raise ScalarCurvatureRangeException(k, k)
    return base_volume(n) / (k / n) ** n


def scaling_law_check(n: int, lambda_values: Sequence[float], quadrature: bool = True) -> ScalingLawReport:
    """
    Volumes of CP^n for several Chern factors by the formula path and, for n <= 2, by quadrature on the chart of
    curvature constant K = lambda / (n + 1).

    :param n: Complex dimension.
    :param lambda_values: Strictly positive Chern factors.
    :param quadrature: False to skip the quadrature path.
    :return: The volumes, with the products V lambda^n of both paths.
    :raise ScalarCurvatureRangeException if a factor is not strictly positive.
    """
    for value in lambda_values:
        if not value > 0:
            raise ScalarCurvatureRangeException(value, value)
    formula_volumes = [base_volume(n) / value ** n for value in lambda_values]
    quadrature_volumes = None
    if quadrature and n <= MAXIMUM_QUADRATURE_DIM:
        quadrature_volumes = [volume_quadrature(SpaceFormChart(n, value / (n + 1))) for value in lambda_values]
    elif quadrature:
        logger.warning(f"No quadrature path in dimension {n}, scaling law checked on the formula path only")
    return ScalingLawReport(n, lambda_values, formula_volumes, quadrature_volumes)


def comparison_verdict(n: int, k1: float, k2: float, V: float) -> VolumeComparisonVerdict:
    """
    Compare a volume with the volumes of CP^n of constant scalar curvature k1 and k2, which bound the volume of a
    Kahler manifold with c_1 > 0 and scalar curvature between k1 and k2.

    :param n: Complex dimension.
    :param k1: Lower scalar curvature.
    :param k2: Upper scalar curvature.
    :param V: Volume to compare.
    :return: The two-sided verdict, with the rigidity flag when an inequality is an equality.
    :raise ScalarCurvatureRangeException if not 0 < k1 <= k2.
    """
    if not 0 < k1 <= k2:
        raise ScalarCurvatureRangeException(k1, k2)
    verdict = VolumeComparisonVerdict(n, k1, k2, V, constant_scalar_volume(n, k1), constant_scalar_volume(n, k2))
    if verdict.rigidity is not None:
        logger.info(f"Volume {V:.9f} in dimension {n} reaches a bound: {verdict.rigidity}")
    return verdict


def negative_case_band(n: int, a: float, b: float, chern_integral: float) -> VolumeBand:
    """
    Volume band of a compact Kahler manifold with c_1 < 0 and scalar curvature between -n b and -n a. Its Chern
    factor lies in [a, b], so its volume lies between (2 pi)^n |int c_1^n| / (n! b^n) and the same with a.

    :param n: Complex dimension.
    :param a: Lower bound of the Chern factor.
    :param b: Upper bound of the Chern factor.
    :param chern_integral: Integral of c_1^n.
    :return: The band.
    :raise ScalarCurvatureRangeException if not 0 < a <= b.
    """
    if not 0 < a <= b:
        raise ScalarCurvatureRangeException(a, b)
    return VolumeBand(
        n, volume_formula(n, b, chern_integral), volume_formula(n, a, chern_integral), negative_case=True
    )


def volume_band_table(n: int, k_values: Sequence[float]) -> List[Tuple[float, float]]:
    """
    Volumes V_k(CP^n) over a grid of scalar curvatures.

    :return: Pairs (k, V_k) in the order of the grid.
    """
    return [(float(k), constant_scalar_volume(n, k)) for k in k_values]


def volume_report(chart: KahlerChart, nb_samples: int = 16, seed: int = 0) -> VolumeReport:
    """
    Volume of a compact model chart by quadrature and by the formula path. The formula path of a product is the
    product of the volumes of its factors.

    :param chart: Chart of CP^n or of a product of projective spaces.
    :param nb_samples: Number of scalar curvature samples.
    :param seed: Seed of the samples.
    :return: The report.
    :raise NonIntegrableChartException if the chart does not cover a compact model space.
    """
    factors = compact_factors(chart)
    if factors is None:
        raise NonIntegrableChartException(chart.name)
    n = chart.complex_dim
    notes = []
    V_formula = float(np.prod([
        volume_formula(factor.complex_dim, chern_factor(factor, nb_samples, seed)) for factor in factors
    ]))
    if len(factors) > 1:
        notes.append(f"formula path: product of the factor volumes, int c_1^n = {chern_number(chart):g}")
    V_quadrature = None
    if n <= MAXIMUM_QUADRATURE_DIM:
        V_quadrature = volume_quadrature(chart)
    else:
        logger.warning(f"Volume of {chart.name} in dimension {n} computed on the formula path only")
        notes.append("quadrature path skipped above dimension 2")
    return VolumeReport(
        n=n,
        chart_name=chart.name,
        V_quadrature=V_quadrature,
        V_formula=V_formula,
        chern_factor=chern_factor(chart, nb_samples, seed),
        scalar_range=scalar_curvature_range(chart, nb_samples, seed),
        notes=notes
    )
