# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import logging
from typing import List, Sequence

import numpy as np

from kahlercomp.domain.exceptions import FrameMismatchException, DimensionMismatchException
from kahlercomp.domain.models.geodesic import ParallelFrame
from kahlercomp.domain.models.hermitian import (
    HermitianMatrix, TolerancePolicy, LoewnerVerdict, hermitian_eigenvalues, loewner_leq, congruence
)
from kahlercomp.domain.models.hessian import (
    HessianPair, BoundMatrices, ComparisonVerdict, ComputationSource, EqualityProbeReport
)
from kahlercomp.domain.models.kahler_chart import KahlerChart, CurvatureSlice
from kahlercomp.domain.models.submanifold import SubmanifoldSpec
from kahlercomp.domain.services.geodesy import normal_geodesic
from .bounds import bound_at
from .riccati_evolution import evolve_hessian, DEFAULT_EPS, DEFAULT_STEP

logger = logging.getLogger(__name__)

# Largest difference of radii for two matrices to be compared
RADIUS_TOLERANCE = 1e-9
# Largest difference of radii for the Hessians of two sources to be matched
MATCHING_TOLERANCE = 1e-6
EQUALITY_TOLERANCE = 1e-5


def verdict(
    computed: HessianPair, bound: BoundMatrices, tolerance: TolerancePolicy,
    source: ComputationSource = ComputationSource.RICCATI
) -> ComparisonVerdict:
    """
    Check the mixed Hessian against its bound in the Loewner order.

    :param computed: Computed Hessian.
    :param bound: Bound at the same radius, in the same frame.
    :param tolerance: Tolerance policy providing psd_slack.
    :param source: Method used to compute the Hessian.
    :return: The verdict.
    :raise FrameMismatchException if the radii or the dimensions differ.
    """
    if abs(computed.t - bound.t) > RADIUS_TOLERANCE * max(1.0, abs(bound.t)) or computed.dim != bound.dim:
        raise FrameMismatchException(computed.t, bound.t, computed.dim, bound.dim)
    loewner = loewner_leq(computed.mixed, bound.bound_mixed, tolerance)
    return ComparisonVerdict(
        t=bound.t,
        source=source,
        gap_min_eigenvalue=loewner.min_eigenvalue_of_gap,
        gap_max_eigenvalue=loewner.max_eigenvalue_of_gap,
        holds=loewner.holds
    )


def _relative_deviation(first: HessianPair, second: HessianPair) -> float:
    scale = max(first.mixed.norm(), second.mixed.norm(), 1e-12)
    return float(np.linalg.norm(first.mixed.entries - second.mixed.entries) / scale)


def oracle_triangle(reference: Sequence[HessianPair], *others: Sequence[HessianPair]) -> float:
    """
    Largest pairwise deviation between the mixed Hessians of several sources, relative to the matrix norm.
    Hessians are matched by radius, and only the radii known to every source are compared.

    :param reference: Hessians of a first source.
    :param others: Hessians of the other sources.
    :return: The largest deviation, 0 if no radius is shared.
    """
    sources = [list(reference)] + [list(other) for other in others]
    deviation = 0.0
    for pair in sources[0]:
        matches = [pair]
        for source in sources[1:]:
            found = [candidate for candidate in source if abs(candidate.t - pair.t) <= MATCHING_TOLERANCE]
            if len(found) == 0:
                break
            matches.append(found[0])
        if len(matches) != len(sources):
            continue
        for index, first in enumerate(matches):
            for second in matches[index + 1:]:
                deviation = max(deviation, _relative_deviation(first, second))
    return deviation


def mixed_derivative(pair: HessianPair, curvature: CurvatureSlice) -> HermitianMatrix:
    """
    Derivative of the mixed Hessian given by the Riccati system: -R_mixed / 2 - M M - N conj(N).
    """
    mixed = pair.mixed.entries
    holo = pair.holo.entries
    derivative = -curvature.R_mixed.entries / 2 - mixed @ mixed - holo @ holo.conj()
    return HermitianMatrix((derivative + derivative.conj().T) / 2)


def congruence_reduction_check(
    pair: HessianPair, curvature: CurvatureSlice, K: float, tolerance: TolerancePolicy
) -> LoewnerVerdict:
    """
    Check the reduced Riccati inequality of B = D M D with D = diag(sqrt(2), 1, ..., 1):
    B' + B^2 <= diag(-2K, -K/2 I).

    :param pair: Hessian at some radius.
    :param curvature: Curvature slice at the same radius.
    :param K: Lower bound of the holomorphic bisectional curvature.
    :param tolerance: Tolerance policy providing psd_slack.
    :return: The Loewner verdict.
    :raise DimensionMismatchException if the curvature and the Hessian dimensions differ.
    """
    n = pair.dim
    if curvature.R_mixed.dim != n:
        raise DimensionMismatchException((n,), (curvature.R_mixed.dim,))
    d = np.array([np.sqrt(2)] + [1.0] * (n - 1))
    mixed = pair.mixed.entries
    inner = mixed_derivative(pair, curvature).entries + mixed @ np.diag(d ** 2) @ mixed
    reduced = congruence(d, HermitianMatrix((inner + inner.conj().T) / 2))
    model = HermitianMatrix.diagonal([-2 * K] + [-K / 2] * (n - 1))
    return loewner_leq(reduced, model, tolerance)


def _curvature_deviation(chart: KahlerChart, frame: ParallelFrame, indices: List[int], K: float) -> float:
    n = chart.complex_dim
    expected_mixed = np.diag([2 * K] + [K] * (n - 1))
    expected_holo = np.zeros((n, n))
    expected_holo[0, 0] = 2 * K
    deviation = 0.0
    for index in indices:
        curvature = chart.curvature_slice_in_frame(frame.path.samples[index].z, frame.frames[index])
        deviation = max(
            deviation,
            float(np.max(np.abs(curvature.R_mixed.entries - expected_mixed))),
            float(np.max(np.abs(curvature.R_holo.entries - expected_holo)))
        )
    return deviation


def equality_probe(
    chart: KahlerChart, spec: SubmanifoldSpec, t_grid: Sequence[float], K: float, eps: float = DEFAULT_EPS,
    step: float = DEFAULT_STEP, tolerance: float = EQUALITY_TOLERANCE
) -> EqualityProbeReport:
    """
    Probe the equality case of the Hessian comparison along the first normal geodesic: the mixed Hessian is compared
    with its bound, the holomorphic Hessian with diag(-(F + G/2), 0), and the curvature slices with those of the
    space form of curvature K.

    :param chart: Chart of the ambient space.
    :param spec: Submanifold, through the origin.
    :param t_grid: Radii of the probe.
    :param K: Curvature constant of the bound.
    :param eps: Distance of the Riccati seed.
    :param step: Integration step.
    :param tolerance: Deviation under which equality is reported.
    :return: The probe report.
    """
    n = chart.complex_dim
    times = np.sort(np.asarray(t_grid, dtype=float))
    _, frame = normal_geodesic(chart, spec, float(times[-1]) + step, step)
    evolution = evolve_hessian(frame, spec, eps=eps, step=step, output_times=times)
    policy = TolerancePolicy(psd_slack=tolerance)
    tangent = slice(n - spec.p, n)

    verdicts = []
    max_abs_gap = 0.0
    holo_deviation = 0.0
    tangent_holo_norm = 0.0
    for pair in evolution.pairs:
        bound = bound_at(K, pair.t, n, spec)
        pair_verdict = verdict(pair, bound, policy)
        verdicts.append(pair_verdict)
        gaps = hermitian_eigenvalues(bound.bound_mixed - pair.mixed)
        max_abs_gap = max(max_abs_gap, float(np.max(np.abs(gaps))))
        expected_holo = np.zeros((n, n))
        expected_holo[0, 0] = -(bound.F + bound.G / 2)
        holo_deviation = max(holo_deviation, float(np.max(np.abs(pair.holo.entries - expected_holo))))
        if spec.p > 0:
            tangent_holo_norm = max(tangent_holo_norm, float(np.max(np.abs(pair.holo.entries[tangent, tangent]))))

    sample_times = frame.path.times
    indices = sorted({int(np.argmin(np.abs(sample_times - t))) for t in times})
    report = EqualityProbeReport(
        chart_name=chart.name,
        submanifold=str(spec),
        K=K,
        verdicts=verdicts,
        max_abs_gap=max_abs_gap,
        holo_deviation=holo_deviation,
        tangent_holo_norm=tangent_holo_norm,
        curvature_deviation=_curvature_deviation(chart, frame, indices, K),
        status=evolution.status,
        tolerance=tolerance
    )
    logger.info(f"Equality probe on {chart.name} for {spec}: {report}")
    return report


def seed_sensitivity(
    frame: ParallelFrame, spec: SubmanifoldSpec, t: float, eps: float = DEFAULT_EPS, step: float = DEFAULT_STEP
) -> float:
    """
    Largest entry of the difference between the mixed Hessians at t seeded at eps and at eps / 2.
    """
    coarse = evolve_hessian(frame, spec, eps=eps, step=step, output_times=[t])
    fine = evolve_hessian(frame, spec, eps=eps / 2, step=step, output_times=[t])
    return float(np.max(np.abs(coarse.pairs[0].mixed.entries - fine.pairs[0].mixed.entries)))


def curvature_monotonicity(
    frame: ParallelFrame, spec: SubmanifoldSpec, t_grid: Sequence[float], scales: Sequence[float] = (0.5, 1.0, 2.0),
    eps: float = DEFAULT_EPS, step: float = DEFAULT_STEP
) -> float:
    """
    Evolve the Hessian with the curvature scaled by increasing factors from the same seed, and measure how far the
    mixed Hessians are from decreasing in the Loewner order.

    :param frame: Adapted parallel frame along the normal geodesic.
    :param spec: Submanifold.
    :param t_grid: Radii at which the Hessians are compared.
    :param scales: Increasing curvature factors.
    :param eps: Distance of the seed.
    :param step: Integration step.
    :return: Smallest eigenvalue of M_c - M_c' over the grid and the consecutive factors c < c'.
    """
    evolutions = [
        evolve_hessian(frame, spec, eps=eps, step=step, output_times=t_grid, curvature_scale=scale)
        for scale in sorted(scales)
    ]
    minimum = np.inf
    for lower, upper in zip(evolutions[:-1], evolutions[1:]):
        for pair in upper.pairs:
            match = lower.pair_at(pair.t)
            if match is not None:
                minimum = min(minimum, float(hermitian_eigenvalues(match.mixed - pair.mixed)[0]))
    return float(minimum)
