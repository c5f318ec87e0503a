# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Volumes of charts by quadrature.
All the charts of the model family are invariant under the rotations z_a -> exp(i theta_a) z_a of each coordinate, so
their integrals reduce to the moduli rho_a = |z_a| with the weight prod 2 pi rho_a.
"""

import logging
from typing import Callable, List, Optional

import numpy as np
from scipy.integrate import quad, nquad

from kahlercomp.domain.exceptions import (
    ChartDomainException, DimensionMismatchException, NonIntegrableChartException, QuadratureDivergenceException
)
from kahlercomp.domain.models.kahler_chart import KahlerChart, SpaceFormChart, ProductChart

logger = logging.getLogger(__name__)

MAXIMUM_QUADRATURE_DIM = 2
DEFAULT_RELATIVE_TOLERANCE = 1e-9
# Largest estimated error, relative to the integral, accepted from the quadrature
DIVERGENCE_LEVEL = 1e-3


def compact_factors(chart: KahlerChart) -> Optional[List[SpaceFormChart]]:
    """
    Space form factors of positive curvature of a chart covering a compact space up to a null set.

    :return: The factors, None if the chart does not cover a compact model space.
    """
    if isinstance(chart, SpaceFormChart):
        factors = [chart]
    elif isinstance(chart, ProductChart):
        factors = chart.factors
    else:
        return None
    if all(factor.K > 0 for factor in factors):
        return factors
    return None


def _coordinate_scales(chart: KahlerChart) -> List[float]:
    factors = compact_factors(chart)
    if factors is None:
        return [1.0] * chart.complex_dim
    return [1 / np.sqrt(factor.K) for factor in factors for _ in range(factor.complex_dim)]


def volume_quadrature(
    chart: KahlerChart, radius: Optional[float] = None, integrand: Optional[Callable[[np.ndarray], float]] = None,
    rel_tol: float = DEFAULT_RELATIVE_TOLERANCE
) -> float:
    """
    Integrate over a chart with respect to its Riemannian volume, 2^n det g times the Lebesgue measure.
    Without radius, the whole chart of a compact model space is integrated through the substitution
    rho = s t / (1 - t), t in [0, 1), s being the length scale of the coordinate.

    :param chart: Chart of complex dimension 1 or 2.
    :param radius: Radius of the polydisk to integrate over. The whole chart if None.
    :param integrand: Function integrated against the volume. The volume itself if None.
    :param rel_tol: Relative tolerance of the quadrature.
    :return: The integral.
    :raise DimensionMismatchException if the chart dimension exceeds MAXIMUM_QUADRATURE_DIM.
    :raise NonIntegrableChartException if the whole chart is requested on a non compact space.
    :raise ChartDomainException if the polydisk leaves the chart domain.
    :raise QuadratureDivergenceException if the quadrature does not converge.
    """
    n = chart.complex_dim
    if n > MAXIMUM_QUADRATURE_DIM:
        raise DimensionMismatchException((MAXIMUM_QUADRATURE_DIM,), (n,))
    if radius is None and compact_factors(chart) is None:
        raise NonIntegrableChartException(chart.name)
    if radius is not None and not chart.in_domain(np.full(n, radius, dtype=complex)):
        raise ChartDomainException(chart.name, [radius] * n)
    scales = _coordinate_scales(chart)

    def density(*moduli) -> float:
        point = np.array(moduli, dtype=complex)
        value = chart.volume_density(point)[0] * np.prod(2 * np.pi * np.array(moduli))
        if integrand is not None:
            value *= integrand(point)
        return float(value)

    def compactified(*variables) -> float:
        moduli = [scale * t / (1 - t) for scale, t in zip(scales, variables)]
        jacobian = np.prod([scale / (1 - t) ** 2 for scale, t in zip(scales, variables)])
        return density(*moduli) * jacobian

    function = density if radius is not None else compactified
    upper = radius if radius is not None else 1.0
    if n == 1:
        value, error = quad(function, 0, upper, epsabs=0, epsrel=rel_tol, limit=200)
    else:
        value, error = nquad(function, [[0, upper]] * n, opts={"epsabs": 0, "epsrel": rel_tol, "limit": 200})
    if not np.isfinite(value) or not error <= DIVERGENCE_LEVEL * abs(value):
        raise QuadratureDivergenceException("volume" if integrand is None else "integral", value)
    logger.debug(f"Quadrature on {chart.name}: {value:.12f} (estimated error {error:.1e})")
    return float(value)


def flat_polydisk_volume(n: int, radius: float = 1.0) -> float:
    """
    Volume (2 pi R^2)^n of the polydisk of radius R in the flat chart, whose density is 2^n.
    """
    return float((2 * np.pi * radius ** 2) ** n)
