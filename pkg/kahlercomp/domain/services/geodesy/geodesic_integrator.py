# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import logging
from typing import Optional, Tuple

import numpy as np

from kahlercomp.domain.exceptions import (
    IntegrationStepException, VelocityNormException, DimensionMismatchException, NonUnitaryFrameException,
    RadialFrameException, ZeroVectorException
)
from kahlercomp.domain.models.kahler_chart import KahlerChart
from kahlercomp.domain.models.kahler_chart.finite_differences import STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS
from kahlercomp.domain.models.geodesic import GeodesicPath, GeodesicSample, GeodesicStatus, ParallelFrame
from kahlercomp.domain.models.numerical_integrator import rk4_step
from kahlercomp.domain.models.submanifold import SubmanifoldSpec
from .frames import metric_gram_schmidt, adapted_initial_frame, UNIT_SPEED_TOLERANCE, DEGENERACY_THRESHOLD

logger = logging.getLogger(__name__)

# Coordinate modulus beyond which a geodesic is considered to escape the chart
MAXIMUM_CHART_RADIUS = 1e6
# Tolerance on the unitarity and radial condition of transported frames
FRAME_TOLERANCE = 1e-8


def _geodesic_equation(time: float, state: np.ndarray, chart: KahlerChart) -> np.ndarray:
    """
    Geodesic equation z'' + gamma(z', z') = 0 as a first order system.

    :param time: Arclength. Unused, added for compatibility.
    :param state: Concatenation of the point z and its velocity v.
    :param chart: Chart providing the Christoffel symbols.
    :return: Derivative of the state.
    """
    n = chart.complex_dim
    z, velocity = state[:n], state[n:]
    christoffel = chart.christoffel_array(z)
    return np.concatenate([velocity, -np.einsum("cab,a,b->c", christoffel, velocity, velocity)])


def _transport_equation(time: float, state: np.ndarray, chart: KahlerChart) -> np.ndarray:
    """
    Geodesic equation coupled with the parallel transport equation e' + gamma(z', e) = 0 of each frame vector.

    :param time: Arclength. Unused, added for compatibility.
    :param state: Concatenation of the point, the velocity and the flattened frame (one row per vector).
    :param chart: Chart providing the Christoffel symbols.
    :return: Derivative of the state.
    """
    n = chart.complex_dim
    z, velocity, frame = state[:n], state[n:2 * n], state[2 * n:].reshape(n, n)
    christoffel = chart.christoffel_array(z)
    velocity_derivative = -np.einsum("cab,a,b->c", christoffel, velocity, velocity)
    frame_derivative = -np.einsum("cab,a,rb->rc", christoffel, velocity, frame)
    return np.concatenate([velocity, velocity_derivative, frame_derivative.ravel()])


def _riemannian_norm(chart: KahlerChart, z: np.ndarray, velocity: np.ndarray) -> float:
    return float(np.sqrt(2 * np.real(velocity @ chart.metric_array(z) @ velocity.conj())))


def integrate_geodesic(chart: KahlerChart, z0, v0, t_max: float, step: float) -> GeodesicPath:
    """
    Integrate a unit speed geodesic with the classical fourth-order Runge-Kutta method at fixed step.
    The velocity is renormalized to unit speed after each step.

    :param chart: Chart in which the geodesic is integrated.
    :param z0: Starting point.
    :param v0: Initial velocity as (1,0)-components, of unit Riemannian norm.
    :param t_max: Arclength at which the integration stops.
    :param step: Integration step, also the spacing of the samples.
    :return: The sampled geodesic, truncated with a status if it leaves the chart.
    :raise IntegrationStepException if the step or the horizon is not strictly positive.
    :raise VelocityNormException if the initial velocity does not have unit norm.
    """
    if not step > 0:
        raise IntegrationStepException("step", step)
    if not t_max > 0:
        raise IntegrationStepException("horizon", t_max)
    n = chart.complex_dim
    z = chart.check_point(z0)
    chart.metric_at(z)
    velocity = np.array(v0, dtype=complex).reshape(-1)
    if velocity.shape != (n,):
        raise DimensionMismatchException((n,), velocity.shape)
    norm = _riemannian_norm(chart, z, velocity)
    if abs(norm - 1) > UNIT_SPEED_TOLERANCE:
        raise VelocityNormException(norm)

    samples = [GeodesicSample(0.0, z, velocity)]
    status = GeodesicStatus.COMPLETE
    max_renormalization = 0.0
    state = np.concatenate([z, velocity])
    nb_steps = int(np.floor(t_max / step + 1e-9))
    for index in range(1, nb_steps + 1):
        time = (index - 1) * step
        try:
            with np.errstate(all="ignore"):
                new_state = rk4_step(_geodesic_equation, time, state, step, chart)
        except np.linalg.LinAlgError:
            new_state = None
        if new_state is None or not np.all(np.isfinite(new_state)) or not chart.in_domain(new_state[:n]):
            status = GeodesicStatus.LEFT_CHART
            logger.warning(f"Geodesic left chart {chart.name} at t={index * step:.6f}")
            break
        if np.max(np.abs(new_state[:n])) > MAXIMUM_CHART_RADIUS:
            status = GeodesicStatus.HIT_RADIUS
            logger.warning(f"Geodesic reached coordinate radius {MAXIMUM_CHART_RADIUS:g} at t={index * step:.6f}")
            break
        z, velocity = new_state[:n], new_state[n:]
        norm = _riemannian_norm(chart, z, velocity)
        renormalization = abs(norm - 1)
        max_renormalization = max(max_renormalization, renormalization)
        logger.debug(f"Step {index}: unit speed renormalization {renormalization:.3e}")
        velocity = velocity / norm
        state = np.concatenate([z, velocity])
        samples.append(GeodesicSample(index * step, z.copy(), velocity.copy()))

    logger.debug(f"Geodesic of {len(samples)} samples, largest renormalization {max_renormalization:.3e}")
    return GeodesicPath(chart, samples, step, status, max_renormalization)


def parallel_transport_frame(path: GeodesicPath, initial_frame: np.ndarray) -> ParallelFrame:
    """
    Transport a unitary frame along a geodesic path.
    From each sample, the geodesic and the frame are integrated jointly over one step, then the frame is
    re-orthonormalized for the metric at the next sample.

    :param path: Geodesic path.
    :param initial_frame: Array whose rows are the frame vectors at the start of the path, e_1 being radial.
    :return: The parallel frame along the path.
    :raise NonUnitaryFrameException if the initial frame is not unitary.
    :raise RadialFrameException if e_1 is not sqrt(2) times the initial velocity.
    :raise DegenerateFrameException if the transported frame degenerates.
    """
    chart = path.chart
    n = chart.complex_dim
    frame = np.array(initial_frame, dtype=complex)
    if frame.shape != (n, n):
        raise DimensionMismatchException((n, n), frame.shape)
    start = path.samples[0]
    unitarity = chart.unitarity_residual(start.z, frame)
    if unitarity > FRAME_TOLERANCE:
        raise NonUnitaryFrameException(unitarity, FRAME_TOLERANCE)
    radial_residual = float(np.max(np.abs(frame[0] - np.sqrt(2) * start.velocity)))
    if radial_residual > FRAME_TOLERANCE:
        raise RadialFrameException(radial_residual, FRAME_TOLERANCE)

    frames = [frame]
    corrections = [0.0]
    for previous, sample in zip(path.samples[:-1], path.samples[1:]):
        state = np.concatenate([previous.z, previous.velocity, frame.ravel()])
        transported = rk4_step(_transport_equation, previous.t, state, path.step, chart)[2 * n:].reshape(n, n)
        frame = metric_gram_schmidt(chart.metric_array(sample.z), transported)
        correction = float(np.max(np.abs(frame - transported)))
        logger.debug(f"t={sample.t:.6f}: frame orthonormalization correction {correction:.3e}")
        radial_residual = max(radial_residual, float(np.max(np.abs(frame[0] - np.sqrt(2) * sample.velocity))))
        frames.append(frame)
        corrections.append(correction)
    return ParallelFrame(path, frames, corrections, radial_residual)


def parallelism_residual(parallel_frame: ParallelFrame) -> float:
    """
    Largest Riemannian norm of the covariant derivative De/dt = e' + gamma(z', e) of the frame vectors, with e'
    estimated by five point central differences on the samples.

    :param parallel_frame: Frame transported along a path.
    :return: The largest residual over interior samples and frame vectors, 0 if the path is too short.
    """
    path = parallel_frame.path
    chart = path.chart
    frames = np.array(parallel_frame.frames)
    residual = 0.0
    for index in range(2, len(frames) - 2):
        derivative = sum(
            weight * frames[index + offset] for offset, weight in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS)
        ) / path.step
        sample = path.samples[index]
        christoffel = chart.christoffel_array(sample.z)
        covariant = derivative + np.einsum("cab,a,rb->rc", christoffel, sample.velocity, frames[index])
        metric = chart.metric_array(sample.z)
        norms = np.sqrt(2 * np.real(np.einsum("ri,ij,rj->r", covariant, metric, covariant.conj())))
        residual = max(residual, float(np.max(norms)))
    return residual


def normal_geodesic(
    chart: KahlerChart, spec: SubmanifoldSpec, t_max: float, step: float, direction: Optional[np.ndarray] = None
) -> Tuple[GeodesicPath, ParallelFrame]:
    """
    Integrate the unit speed geodesic leaving the submanifold orthogonally from the origin, with its adapted parallel
    frame.

    :param chart: Chart of the ambient space.
    :param spec: Submanifold, through the origin.
    :param t_max: Arclength at which the integration stops.
    :param step: Integration step.
    :param direction: (1,0)-components of the initial direction. The first normal coordinate direction if None.
                      The part tangent to S is removed before normalization.
    :return: The geodesic path and its adapted parallel frame.
    :raise ZeroVectorException if the direction is tangent to S.
    """
    n = chart.complex_dim
    spec.check_dimension(n)
    origin = np.zeros(n, dtype=complex)
    metric = chart.metric_at(origin).entries
    if direction is None:
        direction = np.eye(n, dtype=complex)[spec.normal_indices(n)[0]]
    velocity = np.array(direction, dtype=complex).reshape(-1)
    if velocity.shape != (n,):
        raise DimensionMismatchException((n,), velocity.shape)
    if spec.p > 0:
        tangent = metric_gram_schmidt(metric, np.eye(n, dtype=complex)[spec.tangent_indices])
        for vector in tangent:
            velocity = velocity - (velocity @ metric @ vector.conj()) * vector
    norm = np.sqrt(2 * np.real(velocity @ metric @ velocity.conj()))
    if norm < DEGENERACY_THRESHOLD:
        raise ZeroVectorException("normal direction")
    velocity = velocity / norm
    path = integrate_geodesic(chart, origin, velocity, t_max, step)
    frame = parallel_transport_frame(path, adapted_initial_frame(chart, spec, velocity, origin))
    return path, frame
