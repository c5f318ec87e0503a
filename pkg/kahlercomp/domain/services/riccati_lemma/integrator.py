# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import logging

import numpy as np

from kahlercomp.domain.exceptions import IntegrationStepException, EpsilonException
from kahlercomp.domain.models.hermitian import HermitianMatrix
from kahlercomp.domain.models.numerical_integrator import rk4_step, graded_step
from kahlercomp.domain.models.riccati import HermitianCurve, CurveStatus, MatrixCurve

logger = logging.getLogger(__name__)

# Eigenvalue magnitude at which a solution is considered to blow up
BLOW_UP_THRESHOLD = 1e8


def _riccati_equation(time: float, state: np.ndarray, curvature: MatrixCurve) -> np.ndarray:
    """
    Matrix Riccati equation X' = R(t) - X^2.
    """
    return curvature(time) - state @ state


def integrate_riccati(
    curvature: MatrixCurve, seed: HermitianMatrix, t0: float, T: float, step: float, singular: bool = False
) -> HermitianCurve:
    """
    Integrate X' = R - X^2 from X(t0) = seed with the classical fourth-order Runge-Kutta method.
    For a singular seed P / t0 + S, the step grows linearly with t from t0 until it reaches its nominal value.

    :param curvature: Right side R.
    :param seed: Value at t0.
    :param t0: Start time, strictly positive.
    :param T: End time.
    :param step: Nominal step.
    :param singular: True if the seed blows up like 1/t0.
    :return: The solution sampled at every step, truncated with status BLOW_UP if an eigenvalue exceeds 1e8.
    :raise EpsilonException if t0 is not strictly positive.
    :raise IntegrationStepException if the step is not strictly positive or T is not beyond t0.
    """
    if not t0 > 0:
        raise EpsilonException(t0)
    if not step > 0:
        raise IntegrationStepException("step", step)
    if not T > t0:
        raise IntegrationStepException("horizon", T)
    state = np.array(seed.entries, dtype=complex)
    time = t0
    times = [time]
    values = [state]
    status = CurveStatus.COMPLETE
    while time < T:
        h = graded_step(time, step, T) if singular else min(step, T - time)
        state = rk4_step(_riccati_equation, time, state, h, curvature)
        state = (state + state.conj().T) / 2
        time = T if h >= T - time else time + h
        if not np.all(np.isfinite(state)) or np.max(np.abs(np.linalg.eigvalsh(state))) > BLOW_UP_THRESHOLD:
            status = CurveStatus.BLOW_UP
            logger.warning(f"Riccati solution blew up at t={time:.6f}, curve truncated")
            break
        times.append(time)
        values.append(state)
    logger.debug(f"Riccati curve integrated with {len(times) - 1} steps up to t={times[-1]:.6f}")
    return HermitianCurve(np.array(times), np.array(values), T, singular_at_zero=singular, status=status)
