# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Evolution of the complex Hessian of the distance to a complex submanifold along a normal geodesic.
With M = (r_{a bbar}) and N = (r_{a b}) in a parallel unitary frame whose first vector is radial:
    M' = -R_mixed / 2 - M M - N conj(N)
    N' = R_holo / 2 - N M^T - M N
"""

import logging
from typing import List, Optional, Tuple

import numpy as np
from scipy.interpolate import CubicSpline

from kahlercomp.domain.exceptions import EpsilonException, IntegrationStepException, DimensionMismatchException
from kahlercomp.domain.models.geodesic import ParallelFrame
from kahlercomp.domain.models.hermitian import HermitianMatrix, SymmetricComplexMatrix
from kahlercomp.domain.models.hessian import (
    HessianPair, HessianEvolution, ComputationSource, EvolutionStatus, IntegrationOrderEstimate
)
from kahlercomp.domain.models.kahler_chart import CurvatureSlice
from kahlercomp.domain.models.numerical_integrator import rk4_step, graded_step
from kahlercomp.domain.models.submanifold import SubmanifoldSpec

logger = logging.getLogger(__name__)

DEFAULT_EPS = 1e-3
DEFAULT_STEP = 1e-3
# Arclength between two curvature evaluations along the path
CURVATURE_STRIDE = 0.01
# Eigenvalue magnitude at which the Hessian is considered to cross a pole
POLE_THRESHOLD = 1e8
# Minimum observed order before the step is reported as too large
MINIMUM_ORDER = 3.5
# Differences below this level are round-off
ROUND_OFF_LEVEL = 1e-11


class CurvatureInterpolant:
    """
    Curvature slices along a path, evaluated every CURVATURE_STRIDE and interpolated by cubic splines.
    """

    def __init__(self, frame: ParallelFrame, scale: float = 1.0):
        """
        Initialize the interpolant.

        :param frame: Parallel frame along the path.
        :param scale: Factor applied to the curvature.
        """
        path = frame.path
        chart = path.chart
        stride = max(1, int(round(CURVATURE_STRIDE / path.step)))
        indices = list(range(0, len(path), stride))
        if indices[-1] != len(path) - 1:
            indices.append(len(path) - 1)
        slices = [chart.curvature_slice_in_frame(path.samples[i].z, frame.frames[i]) for i in indices]
        times = path.times[indices]
        mixed = np.array([curvature.R_mixed.entries for curvature in slices]) * scale
        holo = np.array([curvature.R_holo.entries for curvature in slices]) * scale
        self.first_slice = CurvatureSlice(
            R_mixed=HermitianMatrix(mixed[0], max_asymmetry=chart.asymmetry_tolerance),
            R_holo=SymmetricComplexMatrix(holo[0], max_asymmetry=chart.asymmetry_tolerance)
        )
        if len(indices) == 1:
            self._constant = (mixed[0], holo[0])
            return
        self._constant = None
        self._spline = CubicSpline(
            times, np.stack([mixed.real, mixed.imag, holo.real, holo.imag], axis=1), axis=0
        )

    def __call__(self, t: float) -> Tuple[np.ndarray, np.ndarray]:
        """
        Get the curvature slice at arclength t.

        :return: The pair (R_mixed, R_holo) as arrays.
        """
        if self._constant is not None:
            return self._constant
        values = self._spline(t)
        return values[0] + 1j * values[1], values[2] + 1j * values[3]


def _pack(mixed: np.ndarray, holo: np.ndarray) -> np.ndarray:
    return np.concatenate([mixed.ravel(), holo.ravel()])


def _unpack(state: np.ndarray, n: int) -> Tuple[np.ndarray, np.ndarray]:
    return state[:n * n].reshape(n, n), state[n * n:].reshape(n, n)


def _riccati_equation(time: float, state: np.ndarray, curvature: CurvatureInterpolant, n: int) -> np.ndarray:
    """
    Coupled Riccati system of the mixed and holomorphic Hessians.

    :param time: Arclength.
    :param state: Flattened mixed Hessian, then flattened holomorphic Hessian.
    :param curvature: Curvature slices along the path.
    :param n: Complex dimension.
    :return: Derivative of the state.
    """
    mixed, holo = _unpack(state, n)
    r_mixed, r_holo = curvature(time)
    mixed_derivative = -r_mixed / 2 - mixed @ mixed - holo @ holo.conj()
    holo_derivative = r_holo / 2 - holo @ mixed.T - mixed @ holo
    return _pack(mixed_derivative, holo_derivative)


def _symmetrize(state: np.ndarray, n: int) -> np.ndarray:
    mixed, holo = _unpack(state, n)
    return _pack((mixed + mixed.conj().T) / 2, (holo + holo.T) / 2)


def _to_pair(t: float, state: np.ndarray, n: int) -> HessianPair:
    mixed, holo = _unpack(_symmetrize(state, n), n)
    return HessianPair(t, HermitianMatrix(mixed), SymmetricComplexMatrix(holo))


def riccati_seed(
    n: int, spec: SubmanifoldSpec, eps: float, curvature: Optional[CurvatureSlice] = None
) -> HessianPair:
    """
    Leading asymptotics of the Hessian at distance eps from the submanifold, in the adapted frame:
    mixed = diag(1/(2 eps), (1/eps) I_(n-p-1), 0_p) and holo = diag(-1/(2 eps), 0).

    :param n: Complex dimension.
    :param spec: Submanifold.
    :param eps: Distance of the seed.
    :param curvature: Curvature slice at the footpoint. If given, the tangent block receives its first order term
                      -(eps/2) R_mixed for the mixed part and (eps/2) R_holo for the holomorphic part.
    :return: The seed.
    :raise EpsilonException if eps is not strictly positive.
    """
    if not eps > 0:
        raise EpsilonException(eps)
    spec.check_dimension(n)
    p = spec.p
    mixed = np.diag([1 / (2 * eps)] + [1 / eps] * (n - p - 1) + [0.0] * p).astype(complex)
    holo = np.zeros((n, n), dtype=complex)
    holo[0, 0] = -1 / (2 * eps)
    if curvature is not None and p > 0:
        if curvature.R_mixed.dim != n:
            raise DimensionMismatchException((n,), (curvature.R_mixed.dim,))
        tangent = slice(n - p, n)
        mixed[tangent, tangent] -= eps / 2 * curvature.R_mixed.entries[tangent, tangent]
        holo[tangent, tangent] += eps / 2 * curvature.R_holo.entries[tangent, tangent]
    return HessianPair(eps, HermitianMatrix(mixed), SymmetricComplexMatrix(holo))


def _crossed_pole(state: np.ndarray, n: int) -> bool:
    if not np.all(np.isfinite(state)):
        return True
    mixed, _ = _unpack(state, n)
    eigenvalues = np.linalg.eigvalsh((mixed + mixed.conj().T) / 2)
    return bool(np.max(np.abs(eigenvalues)) > POLE_THRESHOLD)


def _output_times(frame: ParallelFrame, eps: float, output_times: Optional[List[float]]) -> np.ndarray:
    path = frame.path
    if output_times is None:
        times = path.times
    else:
        times = np.sort(np.asarray(output_times, dtype=float))
    return times[(times > eps * (1 + 1e-9)) & (times <= path.length + 1e-12)]


def evolve_hessian(
    frame: ParallelFrame, spec: SubmanifoldSpec, eps: float = DEFAULT_EPS, step: float = DEFAULT_STEP,
    output_times: Optional[List[float]] = None, curvature_scale: float = 1.0
) -> HessianEvolution:
    """
    Integrate the Hessian of the distance to S along a normal geodesic, from its seed at eps.
    The step grows linearly with t from eps until it reaches its nominal value.

    :param frame: Adapted parallel frame along the normal geodesic.
    :param spec: Submanifold.
    :param eps: Distance of the seed.
    :param step: Nominal integration step.
    :param output_times: Arclengths at which the Hessian is returned. The path samples beyond eps if None.
    :param curvature_scale: Factor applied to the curvature slices.
    :return: The Hessians, truncated with status POLE if an eigenvalue blows up.
    :raise EpsilonException if eps is not strictly positive or not below the path length.
    :raise IntegrationStepException if the step is not strictly positive.
    """
    path = frame.path
    n = path.chart.complex_dim
    if not 0 < eps < path.length:
        raise EpsilonException(eps)
    if not step > 0:
        raise IntegrationStepException("step", step)
    curvature = CurvatureInterpolant(frame, curvature_scale)
    seed = riccati_seed(n, spec, eps, curvature.first_slice)
    state = _pack(seed.mixed.entries, seed.holo.entries)

    pairs = []
    warnings = []
    status = EvolutionStatus.COMPLETE
    time = eps
    nb_steps = 0
    for target in _output_times(frame, eps, output_times):
        while time < target:
            h = graded_step(time, step, target)
            state = _symmetrize(rk4_step(_riccati_equation, time, state, h, curvature, n), n)
            time = target if h >= target - time else time + h
            nb_steps += 1
            if _crossed_pole(state, n):
                status = EvolutionStatus.POLE
                break
        if status == EvolutionStatus.POLE:
            message = f"Hessian eigenvalue exceeded {POLE_THRESHOLD:g} at t={time:.6f}, evolution truncated"
            logger.warning(message)
            warnings.append(message)
            break
        pairs.append(_to_pair(float(target), state, n))

    evolution = HessianEvolution(pairs, ComputationSource.RICCATI, status, warnings)
    residual = evolution.first_column_residual()
    logger.debug(f"Riccati evolution: {nb_steps} steps, {len(pairs)} outputs, first column residual {residual:.3e}")
    return evolution


def _integrate_uniform(
    state: np.ndarray, curvature: CurvatureInterpolant, n: int, t_start: float, t_end: float, nb_steps: int
) -> np.ndarray:
    h = (t_end - t_start) / nb_steps
    for index in range(nb_steps):
        state = rk4_step(_riccati_equation, t_start + index * h, state, h, curvature, n)
    return state


def estimate_integration_order(
    frame: ParallelFrame, spec: SubmanifoldSpec, t_start: float, t_end: float, step: float,
    eps: float = DEFAULT_EPS
) -> IntegrationOrderEstimate:
    """
    Observe the order of the Riccati integration on [t_start, t_end] by integrating at steps h, h/2 and h/4 from the
    Hessian at t_start. A warning is logged if the order is below MINIMUM_ORDER.

    :param frame: Adapted parallel frame along the normal geodesic.
    :param spec: Submanifold.
    :param t_start: Start of the check interval, beyond eps.
    :param t_end: End of the check interval, within the path.
    :param step: Coarsest step h.
    :param eps: Distance of the seed.
    :return: The observed order.
    :raise IntegrationStepException if the interval or the step is invalid.
    """
    if not step > 0 or not t_end > t_start:
        raise IntegrationStepException("step" if not step > 0 else "interval", step if not step > 0 else t_end)
    n = frame.path.chart.complex_dim
    start = evolve_hessian(frame, spec, eps=eps, output_times=[t_start])
    if len(start) == 0:
        raise IntegrationStepException("interval", t_start)
    state = _pack(start.pairs[0].mixed.entries, start.pairs[0].holo.entries)
    curvature = CurvatureInterpolant(frame)
    nb_steps = max(1, int(round((t_end - t_start) / step)))
    results = [
        _integrate_uniform(state, curvature, n, t_start, t_end, nb_steps * factor) for factor in (1, 2, 4)
    ]
    differences = [float(np.linalg.norm(results[0] - results[1])), float(np.linalg.norm(results[1] - results[2]))]
    order = None
    if differences[1] > ROUND_OFF_LEVEL:
        order = float(np.log2(differences[0] / differences[1]))
        if order < MINIMUM_ORDER:
            logger.warning(f"Observed integration order {order:.2f} below {MINIMUM_ORDER} at step {step:g}")
    return IntegrationOrderEstimate(order, differences, (t_end - t_start) / nb_steps)
