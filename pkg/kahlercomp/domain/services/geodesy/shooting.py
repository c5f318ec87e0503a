# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import logging
from typing import Optional

import numpy as np
from scipy import optimize
from scipy.integrate import solve_ivp

from kahlercomp.domain.exceptions import ChartDomainException, ShootingConvergenceException, SubspaceDimensionException
from kahlercomp.domain.models.kahler_chart import KahlerChart, SpaceFormChart

logger = logging.getLogger(__name__)

# Endpoint miss (chart norm) required from the shooting solution
MAXIMUM_MISS = 1e-9
# Residual returned when a trial geodesic leaves the chart
LARGE_RESIDUAL = 1e3
INTEGRATION_TOLERANCE = 1e-12
# Largest relative component along P admitted when the separation geodesic stops
ARRIVAL_TOLERANCE = 1e-6


def _to_complex(state: np.ndarray, n: int):
    z = state[:n] + 1j * state[n:2 * n]
    velocity = state[2 * n:3 * n] + 1j * state[3 * n:]
    return z, velocity


def _to_real(z: np.ndarray, velocity: np.ndarray) -> np.ndarray:
    return np.concatenate([z.real, z.imag, velocity.real, velocity.imag])


def _geodesic_real_equation(
    time: float, state: np.ndarray, chart: KahlerChart, rotated_origin: Optional[np.ndarray] = None
) -> np.ndarray:
    """
    Geodesic equation in real variables, for use with solve_ivp.

    :param time: Parameter of the geodesic.
    :param state: Real and imaginary parts of the point, then of the velocity.
    :param chart: Chart providing the Christoffel symbols.
    :param rotated_origin: Unused, added for compatibility with the arrival event.
    :return: Derivative of the state.
    :raise ChartDomainException if the point leaves the chart.
    """
    n = chart.complex_dim
    z, velocity = _to_complex(state, n)
    if not np.all(np.isfinite(z)) or not chart.in_domain(z):
        raise ChartDomainException(chart.name, z.tolist())
    christoffel = chart.christoffel_array(z)
    acceleration = -np.einsum("cab,a,b->c", christoffel, velocity, velocity)
    return _to_real(velocity, acceleration)


def _endpoint_residual(x: np.ndarray, chart: KahlerChart, z_from: np.ndarray, z_to: np.ndarray) -> np.ndarray:
    """
    Miss of the geodesic starting at z_from with initial velocity x (real and imaginary parts), at parameter 1.
    """
    n = chart.complex_dim
    velocity = x[:n] + 1j * x[n:]
    try:
        solution = solve_ivp(
            fun=_geodesic_real_equation,
            t_span=(0, 1),
            y0=_to_real(z_from, velocity),
            method="DOP853",
            rtol=INTEGRATION_TOLERANCE,
            atol=INTEGRATION_TOLERANCE,
            args=(chart,)
        )
    except (ChartDomainException, np.linalg.LinAlgError):
        return np.full(2 * n, LARGE_RESIDUAL)
    if solution.status != 0 or not np.all(np.isfinite(solution.y[:, -1])):
        return np.full(2 * n, LARGE_RESIDUAL)
    end, _ = _to_complex(solution.y[:, -1], n)
    miss = end - z_to
    return np.concatenate([miss.real, miss.imag])


def shoot_geodesic(chart: KahlerChart, z_from, z_to) -> np.ndarray:
    """
    Find the initial velocity of the geodesic joining two chart points at parameter 1, by root finding on the
    endpoint miss.

    :param chart: Chart containing both points.
    :param z_from: Starting point.
    :param z_to: Target point.
    :return: The (1,0)-components of the initial velocity. Its Riemannian norm is the length of the geodesic.
    :raise ShootingConvergenceException if the endpoint miss stays above 1e-9.
    """
    n = chart.complex_dim
    start = chart.check_point(z_from)
    target = chart.check_point(z_to)
    if np.array_equal(start, target):
        return np.zeros(n, dtype=complex)
    guess = target - start
    result = optimize.root(
        _endpoint_residual, np.concatenate([guess.real, guess.imag]), args=(chart, start, target), method="hybr",
        options={"xtol": 1e-14}
    )
    miss = float(np.linalg.norm(_endpoint_residual(result.x, chart, start, target)))
    logger.debug(f"Shooting from {start.tolist()} to {target.tolist()}: miss {miss:.3e} after {result.nfev} calls")
    if not miss < MAXIMUM_MISS:
        raise ShootingConvergenceException(miss, result.message)
    return result.x[:n] + 1j * result.x[n:]


def distance_oracle(chart: KahlerChart, z_from, z_to) -> float:
    """
    Distance between two chart points, as the length of the shooting geodesic joining them.

    :param chart: Chart containing both points.
    :param z_from: Starting point.
    :param z_to: Target point.
    :return: Length of the shooting geodesic.
    :raise ShootingConvergenceException if the endpoint miss stays above 1e-9.
    """
    start = chart.check_point(z_from)
    velocity = shoot_geodesic(chart, start, z_to)
    return float(np.sqrt(2 * np.real(velocity @ chart.metric_array(start) @ velocity.conj())))


def _midpoint_reflection(n: int, s: int) -> np.ndarray:
    """
    Householder reflection U of C^(n+1) exchanging e_0 and the midpoint (e_0 + e_s+1) / sqrt(2).
    """
    reference = np.zeros(n + 1, dtype=complex)
    reference[0] = 1
    midpoint = reference.copy()
    midpoint[s + 1] = 1
    midpoint = midpoint / np.sqrt(2)
    direction = reference - midpoint
    direction = direction / np.linalg.norm(direction)
    return np.eye(n + 1) - 2 * np.outer(direction, direction.conj())


def _to_chart(reflection: np.ndarray, xi: np.ndarray, K: float) -> np.ndarray:
    rotated = reflection @ xi
    return rotated[1:] / (rotated[0] * np.sqrt(K))


def _arrival_event(time: float, state: np.ndarray, chart: SpaceFormChart, rotated_origin: np.ndarray) -> float:
    """
    Component along e_0 of the homogeneous coordinates of the current point, vanishing on the subspace Q.
    """
    n = chart.complex_dim
    z = state[:n] + 1j * state[n:2 * n]
    return float(np.real(np.vdot(rotated_origin, np.concatenate([[1.0], np.sqrt(chart.K) * z]))))


_arrival_event.terminal = True
_arrival_event.direction = -1


def subspace_separation_oracle(n: int, K: float, s: int) -> float:
    """
    Distance between the complementary subspaces P = span(e_0..e_s) and Q = span(e_s+1..e_n) of CP^n, measured by
    integrating the geodesic leaving e_0 toward e_s+1 until it reaches Q.
    The two points lie in each other's cut locus, so the integration is done in the affine chart centered at their
    midpoint.

    :param n: Complex dimension.
    :param K: Curvature constant, strictly positive.
    :param s: Complex dimension of P.
    :return: Arclength at which the geodesic reaches Q.
    :raise SubspaceDimensionException if s is out of range.
    :raise ShootingConvergenceException if Q is not reached.
    """
    if not 0 <= s <= n - 1:
        raise SubspaceDimensionException(s, n)
    chart = SpaceFormChart(n, K)
    reflection = _midpoint_reflection(n, s)
    origin = np.zeros(n + 1, dtype=complex)
    origin[0] = 1
    target = np.zeros(n + 1, dtype=complex)
    target[s + 1] = 1

    # Velocity of the great circle cos(theta) e_0 + sin(theta) e_s+1 at theta = 0, in chart coordinates
    rotated_origin = reflection @ origin
    rotated_target = reflection @ target
    z0 = _to_chart(reflection, origin, K)
    derivative = (
        (rotated_target[1:] * rotated_origin[0] - rotated_origin[1:] * rotated_target[0])
        / (rotated_origin[0] ** 2 * np.sqrt(K))
    )
    speed = np.sqrt(2 * np.real(derivative @ chart.metric_array(z0) @ derivative.conj()))
    velocity = derivative / speed

    solution = solve_ivp(
        fun=_geodesic_real_equation,
        t_span=(0, 1.25 * np.pi / np.sqrt(2 * K)),
        y0=_to_real(z0, velocity),
        method="DOP853",
        rtol=INTEGRATION_TOLERANCE,
        atol=INTEGRATION_TOLERANCE,
        args=(chart, rotated_origin),
        events=_arrival_event
    )
    if solution.status != 1 or len(solution.t_events[0]) == 0:
        raise ShootingConvergenceException(float("inf"), "geodesic did not reach the complementary subspace")
    end = solution.y_events[0][0]
    xi = reflection @ np.concatenate([[1.0], np.sqrt(K) * (end[:n] + 1j * end[n:2 * n])])
    ratio = float(np.linalg.norm(xi[:s + 1]) / np.linalg.norm(xi))
    if ratio > ARRIVAL_TOLERANCE:
        raise ShootingConvergenceException(ratio, "geodesic stopped away from the complementary subspace")
    logger.debug(f"Separation geodesic reached Q at t={solution.t_events[0][0]:.12f}")
    return float(solution.t_events[0][0])
