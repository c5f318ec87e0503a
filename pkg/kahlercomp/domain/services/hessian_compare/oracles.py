# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import logging
from typing import List, Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp

from kahlercomp.domain.exceptions import ChartDomainException, RadiusException, ShootingConvergenceException
from kahlercomp.domain.models.geodesic import ParallelFrame
from kahlercomp.domain.models.hermitian import HermitianMatrix, SymmetricComplexMatrix
from kahlercomp.domain.models.hessian import HessianPair, HessianEvolution, ComputationSource, EvolutionStatus
from kahlercomp.domain.models.kahler_chart import KahlerChart
from kahlercomp.domain.models.kahler_chart.finite_differences import (
    stencil_points, wirtinger_gradient, wirtinger_hessians
)
from kahlercomp.domain.models.submanifold import SubmanifoldSpec
from kahlercomp.domain.services.geodesy import (
    adapted_initial_frame, integrate_geodesic, parallel_transport_frame, closed_form_distance, footpoint,
    shoot_geodesic
)
from .riccati_evolution import CurvatureInterpolant, DEFAULT_STEP

logger = logging.getLogger(__name__)

DEFAULT_DIFFERENCE_STEP = 1e-4
# Largest distance between the end of the radial geodesic and the target point
ENDPOINT_TOLERANCE = 1e-6
# Condition number of the Jacobi solution matrix beyond which a conjugate point is assumed
CONJUGATE_CONDITION = 1e10
JACOBI_TOLERANCE = 1e-11


def radial_frame_at(
    chart: KahlerChart, spec: SubmanifoldSpec, z, step: float = DEFAULT_STEP
) -> Tuple[np.ndarray, float]:
    """
    Adapted frame at a point, transported along the minimizing geodesic from its footpoint on S.

    :param chart: Chart of the ambient space.
    :param spec: Submanifold.
    :param z: Chart point, off S.
    :param step: Largest integration step of the radial geodesic.
    :return: The frame at z (one row per vector) and the length of the radial geodesic.
    :raise RadiusException if z lies on S.
    :raise ShootingConvergenceException if the radial geodesic does not reach z.
    """
    point = chart.check_point(z)
    base = footpoint(chart, spec, point)
    velocity = shoot_geodesic(chart, base, point)
    length = chart.riemannian_norm(base, velocity)
    if not length > 0:
        raise RadiusException(length)
    unit = velocity / length
    nb_steps = max(1, int(np.ceil(length / step)))
    path = integrate_geodesic(chart, base, unit, length, length / nb_steps)
    miss = float(np.max(np.abs(path.samples[-1].z - point)))
    if len(path) != nb_steps + 1 or miss > ENDPOINT_TOLERANCE:
        raise ShootingConvergenceException(miss, "radial geodesic does not reach the point")
    frame = parallel_transport_frame(path, adapted_initial_frame(chart, spec, unit, base))
    return frame.frames[-1], length


def fd_hessian_oracle(
    chart: KahlerChart, spec: SubmanifoldSpec, z, h: float = DEFAULT_DIFFERENCE_STEP, step: float = DEFAULT_STEP
) -> HessianPair:
    """
    Hessian of the distance to S by central differences of its closed form.
    The mixed part is made of coordinate second derivatives. The holomorphic part is corrected by the Christoffel
    symbols: r_ab = d_a d_b r - gamma^c_ab d_c r. Both are then expressed in the radial parallel frame at z.

    :param chart: Chart of the ambient space.
    :param spec: Submanifold.
    :param z: Chart point, off S and away from its cut locus.
    :param h: Difference step, scaled by max(1, |z|).
    :param step: Largest integration step of the radial geodesic.
    :return: The Hessian at z, with t the distance of z to S.
    :raise ChartDomainException if the stencil leaves the chart domain.
    :raise UnsupportedDistanceException if the distance has no closed form.
    """
    point = chart.check_point(z)
    scaled_step = h * max(1.0, float(np.linalg.norm(point)))
    if not all(chart.in_domain(stencil_point) for stencil_point in stencil_points(point, scaled_step)):
        raise ChartDomainException(chart.name, point.tolist())

    def distance(w: np.ndarray) -> float:
        return closed_form_distance(chart, spec, w)

    frame, _ = radial_frame_at(chart, spec, point, step)
    mixed, holomorphic = wirtinger_hessians(distance, point, scaled_step)
    gradient = wirtinger_gradient(distance, point, scaled_step)
    holomorphic = holomorphic - np.einsum("cab,c->ab", chart.christoffel_array(point), gradient)
    t = distance(point)
    logger.debug(f"Finite difference Hessian at t={t:.6f} with step {scaled_step:.1e}")
    return HessianPair(
        t,
        HermitianMatrix(frame @ mixed @ frame.conj().T, max_asymmetry=chart.asymmetry_tolerance),
        SymmetricComplexMatrix(frame @ holomorphic @ frame.T, max_asymmetry=chart.asymmetry_tolerance)
    )


def _jacobi_equation(time: float, state: np.ndarray, curvature: CurvatureInterpolant, n: int) -> np.ndarray:
    """
    Jacobi equation x'' = (conj(R_holo x) - R_mixed^T x) / 2 of the components x_a of J = x_a e_a + conj(x_a e_a),
    for a family of solutions stored as real columns interleaving real and imaginary parts.

    :param time: Arclength.
    :param state: Flattened solution matrix Y of shape (2n, m), then its derivative.
    :param curvature: Curvature slices along the path.
    :param n: Complex dimension.
    :return: Derivative of the state.
    """
    half = state.shape[0] // 2
    solutions = state[:half].reshape(2 * n, -1)
    x = solutions[0::2] + 1j * solutions[1::2]
    r_mixed, r_holo = curvature(time)
    acceleration = (np.conj(r_holo @ x) - r_mixed.T @ x) / 2
    second = np.empty_like(solutions)
    second[0::2] = acceleration.real
    second[1::2] = acceleration.imag
    return np.concatenate([state[half:], second.ravel()])


def _initial_family(n: int, spec: SubmanifoldSpec) -> Tuple[np.ndarray, np.ndarray]:
    """
    Initial values and derivatives of the Jacobi fields normal to the geodesic: the fields vanish at t = 0 except in
    the directions tangent to S, where they start with a unit value and a vanishing derivative.
    """
    values = np.zeros((2 * n, 2 * n - 1))
    derivatives = np.zeros((2 * n, 2 * n - 1))
    for column, coordinate in enumerate(range(1, 2 * n)):
        if coordinate // 2 >= n - spec.p:
            values[coordinate, column] = 1.0
        else:
            derivatives[coordinate, column] = 1.0
    return values, derivatives


def _shape_operator_to_pair(t: float, shape_operator: np.ndarray) -> HessianPair:
    """
    Convert the shape operator acting on interleaved real coordinates into the complex Hessian.
    """
    a_xx = shape_operator[0::2, 0::2]
    a_yy = shape_operator[1::2, 1::2]
    a_xy = shape_operator[0::2, 1::2]
    a_yx = shape_operator[1::2, 0::2]
    mixed = (a_xx + a_yy + 1j * (a_xy - a_yx)) / 2
    holomorphic = (a_xx - a_yy - 1j * (a_xy + a_yx)) / 2
    return HessianPair(
        t,
        HermitianMatrix((mixed + mixed.conj().T) / 2),
        SymmetricComplexMatrix((holomorphic + holomorphic.T) / 2)
    )


def jacobi_oracle(
    frame: ParallelFrame, spec: SubmanifoldSpec, output_times: Optional[List[float]] = None
) -> HessianEvolution:
    """
    Hessian of the distance to S from the Jacobi fields along a normal geodesic.
    The Jacobi system is integrated for a basis of initial conditions, and the shape operator A = Y' Y^-1 of the
    solution matrix Y, restricted to the directions normal to the geodesic, gives the Hessian in the frame.

    :param frame: Adapted parallel frame along the normal geodesic.
    :param spec: Submanifold.
    :param output_times: Arclengths at which the Hessian is returned. The strictly positive path samples if None.
    :return: The Hessians, truncated with status CONJUGATE_POINT if the solution matrix becomes singular.
    """
    path = frame.path
    n = path.chart.complex_dim
    spec.check_dimension(n)
    times = path.times if output_times is None else np.sort(np.asarray(output_times, dtype=float))
    times = times[(times > 0) & (times <= path.length + 1e-12)]
    if len(times) == 0:
        return HessianEvolution([], ComputationSource.JACOBI)
    curvature = CurvatureInterpolant(frame)
    values, derivatives = _initial_family(n, spec)
    solution = solve_ivp(
        fun=_jacobi_equation,
        t_span=(0, float(times[-1])),
        y0=np.concatenate([values.ravel(), derivatives.ravel()]),
        method="DOP853",
        t_eval=times,
        rtol=JACOBI_TOLERANCE,
        atol=JACOBI_TOLERANCE,
        args=(curvature, n)
    )

    pairs = []
    warnings = []
    status = EvolutionStatus.COMPLETE
    size = 2 * n * (2 * n - 1)
    for index, t in enumerate(solution.t):
        solutions = solution.y[:size, index].reshape(2 * n, -1)[1:]
        solution_derivatives = solution.y[size:, index].reshape(2 * n, -1)[1:]
        condition = np.linalg.cond(solutions)
        if not condition < CONJUGATE_CONDITION:
            status = EvolutionStatus.CONJUGATE_POINT
            message = f"Jacobi solution matrix singular (condition {condition:.1e}) at t={t:.6f}, evolution truncated"
            logger.warning(message)
            warnings.append(message)
            break
        shape_operator = np.zeros((2 * n, 2 * n))
        reduced = solution_derivatives @ np.linalg.inv(solutions)
        shape_operator[1:, 1:] = (reduced + reduced.T) / 2
        pairs.append(_shape_operator_to_pair(float(t), shape_operator))
    return HessianEvolution(pairs, ComputationSource.JACOBI, status, warnings)
