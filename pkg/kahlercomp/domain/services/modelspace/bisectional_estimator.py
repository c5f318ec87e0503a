# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import List, Tuple

import numpy as np

from kahlercomp.domain.exceptions import EmptySampleException
from kahlercomp.domain.models.kahler_chart import KahlerChart


class BisectionalEstimate:
    """
    Smallest sampled value of the holomorphic bisectional curvature quotient
    R(X, conj(X), Y, conj(Y)) / (|X|^2 |Y|^2 + |<X, conj(Y)>|^2).

    :param min_ratio: Smallest quotient.
    :param argmin: Point and vectors (z, X, Y) realizing it.
    :param max_imaginary_part: Largest imaginary part of the sampled curvature numerators, relative to the denominators.
    :param nb_samples: Number of sampled pairs.
    """

    def __init__(
        self, min_ratio: float, argmin: Tuple[np.ndarray, np.ndarray, np.ndarray], max_imaginary_part: float,
        nb_samples: int
    ):
        self.min_ratio = min_ratio
        self.argmin = argmin
        self.max_imaginary_part = max_imaginary_part
        self.nb_samples = nb_samples

    def __repr__(self):
        return f"BisectionalEstimate(min_ratio={self.min_ratio}, nb_samples={self.nb_samples})"


def _direction_pairs(n: int, samples_per_point: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pairs of (1,0)-vectors probed at a point: every pair of coordinate directions, then random complex pairs.
    """
    eye = np.eye(n, dtype=complex)
    xs = [eye[a] for a in range(n) for b in range(n)]
    ys = [eye[b] for a in range(n) for b in range(n)]
    shape = (samples_per_point, n)
    random_x = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    random_y = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return np.concatenate([np.array(xs), random_x]), np.concatenate([np.array(ys), random_y])


def bisectional_lower_bound_estimate(
    chart: KahlerChart, sample_points: List, samples_per_point: int, rng_seed: int
) -> BisectionalEstimate:
    """
    Estimate the lower bound of the holomorphic bisectional curvature of a chart.
    Each point draws its random vectors from its own stream seeded by (rng_seed, point index).

    :param chart: Chart to probe.
    :param sample_points: Chart points.
    :param samples_per_point: Number of random vector pairs per point.
    :param rng_seed: Seed of the random streams.
    :return: The smallest sampled quotient and where it is reached.
    :raise EmptySampleException if there is no sample point.
    """
    if len(sample_points) == 0:
        raise EmptySampleException("bisectional_lower_bound_estimate")
    min_ratio = np.inf
    argmin = None
    max_imaginary_part = 0.0
    nb_samples = 0
    for index, z in enumerate(sample_points):
        point = chart.check_point(z)
        metric = chart.metric_at(point).entries
        tensor = chart.curvature_tensor_at(point)
        rng = np.random.default_rng([rng_seed, index])
        xs, ys = _direction_pairs(chart.complex_dim, samples_per_point, rng)
        numerators = np.einsum("ijkl,si,sj,sk,sl->s", tensor, xs, xs.conj(), ys, ys.conj())
        x_norms = np.real(np.einsum("si,ij,sj->s", xs, metric, xs.conj()))
        y_norms = np.real(np.einsum("si,ij,sj->s", ys, metric, ys.conj()))
        products = np.einsum("si,ij,sj->s", xs, metric, ys.conj())
        denominators = x_norms * y_norms + np.abs(products) ** 2
        ratios = np.real(numerators) / denominators
        max_imaginary_part = max(max_imaginary_part, float(np.max(np.abs(np.imag(numerators)) / denominators)))
        nb_samples += len(ratios)
        best = int(np.argmin(ratios))
        if ratios[best] < min_ratio:
            min_ratio = float(ratios[best])
            argmin = (point, xs[best], ys[best])
    return BisectionalEstimate(min_ratio, argmin, max_imaginary_part, nb_samples)
