# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
First Dirichlet eigenvalue of the complex Laplacian on a tube of radius r0 around a linear subvariety of a complex
space form, reduced to the radial equation
    u'' = -2 delta_r(r) u' - 2 lambda u
and solved by shooting on lambda.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicSpline

from kahlercomp.domain.exceptions import (
    EigenvalueBracketException, ModelDiameterException, RadiusException, SubspaceDimensionException
)
from kahlercomp.domain.models.spectral import RadialProfile, RadialShootingResult
from kahlercomp.domain.services.hessian_compare.bounds import laplacian_of_distance

logger = logging.getLogger(__name__)

# Radius where the regular solution is started from its expansion
START_RADIUS = 1e-6
DEFAULT_SHOOTING_TOLERANCE = 1e-10
# The upper end of the eigenvalue bracket is doubled up to this value
MAXIMUM_EIGENVALUE = 1e6
MAXIMUM_ITERATIONS = 200
ODE_TOLERANCE = 1e-12
NB_SAMPLES = 2001


def radial_profile(n: int, s: int, K: float = 1.0) -> RadialProfile:
    """
    Radial profile of the distance to a linear subvariety in the space form of curvature K.

    :param n: Complex dimension of the space.
    :param s: Complex dimension of the subvariety.
    :param K: Curvature constant.
    :return: The profile.
    :raise SubspaceDimensionException if s is not in [0, n - 1].
    """
    if not 0 <= s <= n - 1:
        raise SubspaceDimensionException(s, n)

    def delta_r(r: float) -> float:
        return laplacian_of_distance(K, r, n, s)

    return RadialProfile(n, s, K, delta_r)


def critical_radius(n: int, s: int, K: float = 1.0) -> float:
    """
    Radius at which the first Dirichlet eigenvalue of the tube equals (n + 1) K, given by
    cos(sqrt(2K) r0) = (2s + 1 - n) / (n + 1). The eigenfunction is then cos(sqrt(2K) r) + (n - 2s - 1) / (n + 1).

    :param n: Complex dimension of the space.
    :param s: Complex dimension of the subvariety.
    :param K: Curvature constant, strictly positive.
    :return: The radius.
    :raise SubspaceDimensionException if s is not in [0, n - 1].
    """
    if not 0 <= s <= n - 1:
        raise SubspaceDimensionException(s, n)
    return float(np.arccos((2 * s + 1 - n) / (n + 1)) / np.sqrt(2 * K))


def _radial_equation(r: float, state: np.ndarray, profile: RadialProfile, eigenvalue: float) -> np.ndarray:
    return np.array([state[1], -2 * profile.delta_r(r) * state[1] - 2 * eigenvalue * state[0]])


def _first_zero(r: float, state: np.ndarray, profile: RadialProfile, eigenvalue: float) -> float:
    return state[0]


_first_zero.terminal = True
_first_zero.direction = -1


def _initial_state(profile: RadialProfile, eigenvalue: float) -> np.ndarray:
    """
    Regular solution u = 1 + c2 r^2 near the center, with c2 balancing the leading terms of the equation.
    """
    c2 = -eigenvalue / (2 * profile.normal_dim)
    return np.array([1 + c2 * START_RADIUS ** 2, 2 * c2 * START_RADIUS])


def _shoot(profile: RadialProfile, eigenvalue: float, r0: float) -> Tuple[bool, float]:
    """
    Integrate the radial equation up to r0.

    :return: True if u vanishes before r0, and the last value of u.
    """
    solution = solve_ivp(
        fun=_radial_equation,
        t_span=(START_RADIUS, r0),
        y0=_initial_state(profile, eigenvalue),
        method="DOP853",
        events=_first_zero,
        rtol=ODE_TOLERANCE,
        atol=ODE_TOLERANCE,
        args=(profile, eigenvalue)
    )
    return len(solution.t_events[0]) > 0, float(solution.y[0, -1])


def _sample(profile: RadialProfile, eigenvalue: float, r0: float) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    Sample the eigenfunction on [START_RADIUS, r0] and measure the residual of the radial equation, with u'' taken
    from a spline of u'.
    """
    radii = np.linspace(START_RADIUS, r0, NB_SAMPLES)
    solution = solve_ivp(
        fun=_radial_equation,
        t_span=(START_RADIUS, r0),
        y0=_initial_state(profile, eigenvalue),
        method="DOP853",
        t_eval=radii,
        rtol=ODE_TOLERANCE,
        atol=ODE_TOLERANCE,
        args=(profile, eigenvalue)
    )
    values, derivatives = solution.y
    second = CubicSpline(radii, derivatives).derivative()(radii)
    delta_r = np.array([profile.delta_r(r) for r in radii])
    equation = second / 2 + delta_r * derivatives + eigenvalue * values
    residual = float(np.linalg.norm(equation) / np.linalg.norm(values))
    return radii, values, residual


def radial_dirichlet_lambda1(
    n: int, s: int, r0: Optional[float] = None, shooting_tol: float = DEFAULT_SHOOTING_TOLERANCE, K: float = 1.0
) -> RadialShootingResult:
    """
    First Dirichlet eigenvalue of the tube of radius r0 around a linear subvariety of dimension s, among functions of
    the distance. The eigenvalue is bisected between a value whose solution stays positive on [0, r0] and a value
    whose solution vanishes before r0.

    :param n: Complex dimension of the space.
    :param s: Complex dimension of the subvariety.
    :param r0: Radius of the tube. The critical radius if None.
    :param shooting_tol: Width of the final eigenvalue bracket, relative to max(1, eigenvalue).
    :param K: Curvature constant, strictly positive.
    :return: The eigenvalue with its sampled eigenfunction.
    :raise SubspaceDimensionException if s is not in [0, n - 1].
    :raise RadiusException if r0 is not strictly positive.
    :raise ModelDiameterException if r0 reaches the diameter pi / sqrt(2K).
    :raise EigenvalueBracketException if no eigenvalue below MAXIMUM_EIGENVALUE makes the solution vanish.
    """
    profile = radial_profile(n, s, K)
    critical = critical_radius(n, s, K)
    r0 = critical if r0 is None else float(r0)
    if not r0 > START_RADIUS:
        raise RadiusException(r0)
    if not np.sqrt(2 * K) * r0 < np.pi:
        raise ModelDiameterException(K, r0)

    lower, upper = 0.0, 1.0
    lower_value = 1.0
    upper_vanishes, upper_value = _shoot(profile, upper, r0)
    while not upper_vanishes:
        lower, lower_value = upper, upper_value
        upper *= 2
        if upper > MAXIMUM_EIGENVALUE:
            raise EigenvalueBracketException(lower, upper, lower_value, upper_value)
        upper_vanishes, upper_value = _shoot(profile, upper, r0)

    iterations = 0
    while upper - lower > shooting_tol * max(1.0, upper) and iterations < MAXIMUM_ITERATIONS:
        middle = (lower + upper) / 2
        vanishes, _ = _shoot(profile, middle, r0)
        if vanishes:
            upper = middle
        else:
            lower = middle
        iterations += 1
        logger.debug(f"Radial shooting (n={n}, s={s}, r0={r0:.6f}): bracket [{lower:.12f}, {upper:.12f}]")

    eigenvalue = (lower + upper) / 2
    radii, values, residual = _sample(profile, eigenvalue, r0)
    result = RadialShootingResult(
        eigenvalue=eigenvalue,
        residual=residual,
        sample_points=radii,
        sample_values=values,
        n=n,
        s=s,
        r0=r0,
        bracket=(lower, upper),
        iterations=iterations,
        critical_radius=critical,
        expected_eigenvalue=(n + 1) * K
    )
    if result.at_critical_radius and abs(result.critical_discrepancy) > 1e-6:
        logger.warning(
            f"Shooting eigenvalue {eigenvalue:.9f} differs from {(n + 1) * K:g} "
            f"at the critical radius of (n={n}, s={s})"
        )
    return result
