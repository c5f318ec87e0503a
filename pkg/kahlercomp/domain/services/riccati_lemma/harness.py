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

from kahlercomp.domain.exceptions import IntegrationStepException
from kahlercomp.domain.models.hermitian import HermitianMatrix, TolerancePolicy
from kahlercomp.domain.models.riccati import (
    RiccatiInstance, ComparisonResult, ComparisonOutcome, RiccatiSuiteSummary, CurveStatus
)
from .instances import generate_instance, ConstantCurve, DEFAULT_T, DEFAULT_T0, MAXIMUM_DIM
from .integrator import integrate_riccati

logger = logging.getLogger(__name__)

DEFAULT_STEP = 1e-3
DEFAULT_TOLERANCE = TolerancePolicy(psd_slack=1e-9)


def _smallest_eigenvalue(matrix: np.ndarray) -> float:
    return float(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0])


def comparison_check(
    instance: RiccatiInstance, step: float = DEFAULT_STEP, tolerance: TolerancePolicy = DEFAULT_TOLERANCE
) -> ComparisonResult:
    """
    Integrate both problems of an instance from their common seed and check A <= B at every common sample.
    The hypothesis R_A <= R_B is checked first on the same grid: if it fails, the instance is reported as a
    hypothesis violation and no conclusion is drawn.

    :param instance: Instance to check.
    :param step: Nominal integration step.
    :param tolerance: Tolerance policy providing psd_slack.
    :return: The comparison result.
    """
    smaller = integrate_riccati(instance.R_A, instance.seed, instance.t0, instance.T, step, instance.singular_seed)
    larger = integrate_riccati(instance.R_B, instance.seed, instance.t0, instance.T, step, instance.singular_seed)
    nb_samples = min(len(smaller), len(larger))
    times = smaller.times[:nb_samples]

    hypothesis_margins = [_smallest_eigenvalue(instance.R_B(t) - instance.R_A(t)) for t in times]
    worst_hypothesis = int(np.argmin(hypothesis_margins))
    if hypothesis_margins[worst_hypothesis] < -tolerance.psd_slack:
        logger.info(f"Instance {instance.index}: R_A <= R_B fails, no comparison drawn")
        return ComparisonResult(
            instance.index, ComparisonOutcome.HYPOTHESIS_VIOLATION, hypothesis_margins[worst_hypothesis],
            float(times[worst_hypothesis])
        )

    margins = [
        _smallest_eigenvalue(larger.values[index] - smaller.values[index]) for index in range(nb_samples)
    ]
    worst = int(np.argmin(margins))
    outcome = ComparisonOutcome.HOLDS if margins[worst] >= -tolerance.psd_slack else ComparisonOutcome.VIOLATED
    truncated = smaller.status == CurveStatus.BLOW_UP or larger.status == CurveStatus.BLOW_UP
    if outcome == ComparisonOutcome.VIOLATED:
        logger.warning(f"Instance {instance.index}: A <= B violated by {-margins[worst]:.3e} at t={times[worst]:.6f}")
    return ComparisonResult(instance.index, outcome, margins[worst], float(times[worst]), truncated)


def run_suite(
    nb_instances: int, suite_seed: int, T: float = DEFAULT_T, step: float = DEFAULT_STEP, t0: float = DEFAULT_T0,
    tolerance: TolerancePolicy = DEFAULT_TOLERANCE, max_dim: int = MAXIMUM_DIM
) -> RiccatiSuiteSummary:
    """
    Check a suite of random instances, each drawn from the stream seeded by (suite_seed, index).

    :param nb_instances: Number of instances.
    :param suite_seed: Seed of the suite.
    :param T: End time of the instances.
    :param step: Nominal integration step.
    :param t0: Seed time of the instances.
    :param tolerance: Tolerance policy providing psd_slack.
    :param max_dim: Largest dimension of the instances.
    :return: The suite summary.
    """
    results = [
        comparison_check(generate_instance(suite_seed, index, T=T, t0=t0, max_dim=max_dim), step, tolerance)
        for index in range(nb_instances)
    ]
    summary = RiccatiSuiteSummary(suite_seed, results)
    logger.info(f"Riccati comparison suite: {summary}")
    return summary


def scalar_closed_form(R: float, t: float) -> float:
    """
    Solution of x' = R - x^2 with x ~ 1/t at 0: sqrt(R) coth(sqrt(R) t) if R > 0, 1/t if R = 0 and
    sqrt(-R) cot(sqrt(-R) t) if R < 0.
    """
    if R > 0:
        return float(np.sqrt(R) / np.tanh(np.sqrt(R) * t))
    if R < 0:
        return float(np.sqrt(-R) / np.tan(np.sqrt(-R) * t))
    return 1 / t


def scalar_closed_form_check(
    R: float, T: float = DEFAULT_T, step: float = DEFAULT_STEP, t0: float = DEFAULT_T0
) -> float:
    """
    Integrate the scalar equation x' = R - x^2 from its singular seed and compare it with its closed form.

    :param R: Constant right side.
    :param T: End time, below pi / sqrt(-R) if R < 0.
    :param step: Nominal integration step.
    :param t0: Seed time.
    :return: Largest relative deviation from the closed form over the samples.
    :raise IntegrationStepException if the end time reaches the pole of the closed form.
    """
    if R < 0 and not np.sqrt(-R) * T < np.pi:
        raise IntegrationStepException("horizon", T)
    seed = HermitianMatrix(np.array([[scalar_closed_form(R, t0)]], dtype=complex))
    curve = integrate_riccati(ConstantCurve(np.array([[R]], dtype=complex)), seed, t0, T, step, singular=True)
    exact = np.array([scalar_closed_form(R, t) for t in curve.times])
    deviation = float(np.max(np.abs(np.real(curve.values[:, 0, 0]) - exact) / np.abs(exact)))
    logger.debug(f"Scalar Riccati check with R={R:g}: relative deviation {deviation:.3e}")
    return deviation
