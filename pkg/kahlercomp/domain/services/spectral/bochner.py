# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Integrated Bochner identity and equality case of the first eigenvalue estimate on CP^1.

CP^1 is covered by the disks |sqrt(K) z| <= 1 of its two affine charts z and w = 1 / (K z), which carry the same
metric g = (1 + K |z|^2)^-2. Functions are given on the embedded sphere and pulled back to the charts by the
stereographic map. In a chart, with dV = 2 g dx dy:
    |du|^2 = |u_z|^2 / g, u_;zz = u_zz - gamma u_z, Delta u = u_zzbar / g.
"""

import logging
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from kahlercomp.domain.exceptions import (
    DimensionMismatchException, NonIntegrableChartException, QuadratureDivergenceException
)
from kahlercomp.domain.models.kahler_chart import KahlerChart, SpaceFormChart
from kahlercomp.domain.models.kahler_chart.finite_differences import planar_derivatives
from kahlercomp.domain.models.spectral import BochnerIdentityReport, EqualityCaseReport

logger = logging.getLogger(__name__)

DEFAULT_DIFFERENCE_STEP = 1e-3
NB_RADIAL_NODES = 48
NB_ANGULAR_NODES = 64
# Largest eigenvalue residual for a function to be considered an eigenfunction
EIGEN_RESIDUAL_THRESHOLD = 1e-3

SphereFunction = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


class CP1Function:
    """
    Real function on CP^1, given on the unit sphere of R^3.

    :param name: Identifier.
    :param sphere_function: Function of the coordinates (x1, x2, x3) on the unit sphere.
    :param eigenvalue: Eigenvalue of the complex Laplacian for K = 1, None if the function is not an eigenfunction.
    """

    def __init__(self, name: str, sphere_function: SphereFunction, eigenvalue: Optional[float] = None):
        self.name = name
        self.sphere_function = sphere_function
        self.eigenvalue = eigenvalue

    def __repr__(self):
        return f"CP1Function(name={self.name}, eigenvalue={self.eigenvalue})"


EIGENFUNCTION_LIBRARY: Dict[str, CP1Function] = {
    function.name: function for function in [
        CP1Function("constant", lambda x1, x2, x3: np.ones_like(x1), 0.0),
        CP1Function("x1", lambda x1, x2, x3: x1, 2.0),
        CP1Function("x3", lambda x1, x2, x3: x3, 2.0),
        CP1Function("zonal_quadratic", lambda x1, x2, x3: 3 * x3 ** 2 - 1, 6.0),
        CP1Function("negative_control", lambda x1, x2, x3: x3 ** 2 + x1)
    ]
}


def sphere_coordinates(z: np.ndarray, K: float = 1.0, reflected: bool = False) -> Tuple[np.ndarray, ...]:
    """
    Coordinates on the unit sphere of the points of a chart of CP^1, by inverse stereographic projection of sqrt(K) z.

    :param z: Complex array of chart points.
    :param K: Curvature constant.
    :param reflected: True for the second chart w = 1 / (K z), whose image is reflected by (x1, x2, x3) ->
                      (x1, -x2, -x3).
    :return: The arrays x1, x2 and x3.
    """
    scaled = np.sqrt(K) * np.asarray(z, dtype=complex)
    squared = np.abs(scaled) ** 2
    x1 = 2 * scaled.real / (1 + squared)
    x2 = 2 * scaled.imag / (1 + squared)
    x3 = (1 - squared) / (1 + squared)
    if reflected:
        return x1, -x2, -x3
    return x1, x2, x3


def _disk_nodes(radius: float, nb_radial: int, nb_angular: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Product quadrature of a disk: Gauss-Legendre on the radius and the trapezoidal rule on the angle.

    :return: Complex nodes and their weights for dx dy.
    """
    nodes, weights = np.polynomial.legendre.leggauss(nb_radial)
    radii = radius * (nodes + 1) / 2
    radial_weights = radius * weights / 2 * radii
    angles = 2 * np.pi * np.arange(nb_angular) / nb_angular
    points = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    point_weights = (radial_weights[:, None] * np.full(nb_angular, 2 * np.pi / nb_angular)[None, :]).ravel()
    return points, point_weights


def _check_chart(chart: Optional[KahlerChart]) -> KahlerChart:
    chart = SpaceFormChart(1, 1.0) if chart is None else chart
    if chart.complex_dim != 1:
        raise DimensionMismatchException((1,), (chart.complex_dim,))
    if chart.curvature_constant is None or not chart.curvature_constant > 0:
        raise NonIntegrableChartException(chart.name)
    return chart


def _local_quantities(
    chart: KahlerChart, function: CP1Function, reflected: bool, nb_radial: int, nb_angular: int, h: float
) -> Dict[str, np.ndarray]:
    """
    Values of u, its derivatives and the geometry at the quadrature nodes of one chart disk.
    """
    K = chart.curvature_constant
    points, weights = _disk_nodes(1 / np.sqrt(K), nb_radial, nb_angular)

    def pulled_back(z: np.ndarray) -> np.ndarray:
        return function.sphere_function(*sphere_coordinates(z, K, reflected))

    u_x, u_y, u_xx, u_yy, u_xy = planar_derivatives(pulled_back, points, h)
    u_z = (u_x - 1j * u_y) / 2
    u_zz = (u_xx - u_yy - 2j * u_xy) / 4
    u_zzbar = (u_xx + u_yy) / 4
    metric = np.array([chart.metric_array(np.array([point]))[0, 0].real for point in points])
    christoffel = np.array([chart.christoffel_array(np.array([point]))[0, 0, 0] for point in points])
    ricci = np.array([chart.ricci_at([point]).entries[0, 0].real for point in points])
    return {
        "u": pulled_back(points),
        "u_z": u_z,
        "covariant_zz": u_zz - christoffel * u_z,
        "laplacian": u_zzbar / metric,
        "metric": metric,
        "ricci": ricci,
        "volume": 2 * metric * weights
    }


def _both_disks(
    chart: KahlerChart, function: CP1Function, nb_radial: int, nb_angular: int, h: float
) -> Dict[str, np.ndarray]:
    disks = [_local_quantities(chart, function, reflected, nb_radial, nb_angular, h) for reflected in (False, True)]
    return {key: np.concatenate([disk[key] for disk in disks]) for key in disks[0]}


def _integrate(quantity: str, integrand: np.ndarray, volume: np.ndarray) -> float:
    value = float(np.sum(integrand * volume))
    if not np.all(np.isfinite(integrand)) or not np.isfinite(value):
        raise QuadratureDivergenceException(quantity, value)
    return value


def bochner_identity_check(
    function: CP1Function, eigenvalue: Optional[float] = None, chart: Optional[KahlerChart] = None,
    nb_radial: int = NB_RADIAL_NODES, nb_angular: int = NB_ANGULAR_NODES, h: float = DEFAULT_DIFFERENCE_STEP
) -> BochnerIdentityReport:
    """
    Evaluate both sides of lambda int |du|^2 = int |u_;ab|^2 + int Ric(du, du) by quadrature.

    :param function: Function on CP^1.
    :param eigenvalue: Eigenvalue of the function. Its eigenvalue for K = 1 scaled by K if None.
    :param chart: One dimensional space form chart of positive curvature. CP^1 with K = 1 if None.
    :param nb_radial: Number of radial quadrature nodes per disk.
    :param nb_angular: Number of angular quadrature nodes per disk.
    :param h: Finite difference step.
    :return: The integrals of both sides.
    :raise DimensionMismatchException if the chart is not one dimensional.
    :raise NonIntegrableChartException if the chart is not a space form of positive curvature.
    :raise QuadratureDivergenceException if an integrand is not finite.
    """
    chart = _check_chart(chart)
    K = chart.curvature_constant
    if eigenvalue is None:
        eigenvalue = 0.0 if function.eigenvalue is None else function.eigenvalue * K
    values = _both_disks(chart, function, nb_radial, nb_angular, h)
    metric = values["metric"]
    squared_gradient = np.abs(values["u_z"]) ** 2 / metric
    report = BochnerIdentityReport(
        eigenvalue=eigenvalue,
        gradient_energy=_integrate("|du|^2", squared_gradient, values["volume"]),
        hessian_energy=_integrate("|u_ab|^2", np.abs(values["covariant_zz"]) ** 2 / metric ** 2, values["volume"]),
        ricci_energy=_integrate("Ric(du, du)", values["ricci"] / metric * squared_gradient, values["volume"]),
        eigen_residual=_eigen_residual(values, eigenvalue)
    )
    if report.eigen_residual > EIGEN_RESIDUAL_THRESHOLD:
        logger.warning(
            f"{function.name} is not an eigenfunction for {eigenvalue:g} (residual {report.eigen_residual:.3e})"
        )
    logger.debug(f"Bochner identity for {function.name}: {report}")
    return report


def _eigen_residual(values: Dict[str, np.ndarray], eigenvalue: float) -> float:
    norm = np.sqrt(_integrate("u^2", values["u"] ** 2, values["volume"]))
    if norm < 1e-14:
        return 0.0
    equation = values["laplacian"] + eigenvalue * values["u"]
    return float(np.sqrt(_integrate("(Delta u + lambda u)^2", equation ** 2, values["volume"])) / norm)


def equality_case_checks(
    function: CP1Function, chart: Optional[KahlerChart] = None, nb_radial: int = NB_RADIAL_NODES,
    nb_angular: int = NB_ANGULAR_NODES, h: float = DEFAULT_DIFFERENCE_STEP
) -> EqualityCaseReport:
    """
    Measure the quantities that vanish for a first eigenfunction of an Einstein space with Ric = c g when the
    eigenvalue equals c: the covariant holomorphic Hessian u_;ab, and the variation of phi = Delta u + c u.

    :param function: Function on CP^1.
    :param chart: One dimensional space form chart of positive curvature. CP^1 with K = 1 if None.
    :param nb_radial: Number of radial sample nodes per disk.
    :param nb_angular: Number of angular sample nodes per disk.
    :param h: Finite difference step.
    :return: The largest norm of u_;ab and the largest deviation of phi from its mean over the samples.
    :raise DimensionMismatchException if the chart is not one dimensional.
    :raise NonIntegrableChartException if the chart is not a space form of positive curvature.
    """
    chart = _check_chart(chart)
    c = 2 * chart.curvature_constant
    values = _both_disks(chart, function, nb_radial, nb_angular, h)
    phi = values["laplacian"] + c * values["u"]
    report = EqualityCaseReport(
        uab_norm=float(np.max(np.abs(values["covariant_zz"]) / values["metric"])),
        phi_variation=float(np.max(np.abs(phi - np.mean(phi)))),
        c=c
    )
    logger.debug(f"Equality case for {function.name}: {report}")
    return report
