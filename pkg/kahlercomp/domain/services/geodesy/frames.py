# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import Optional

import numpy as np

from kahlercomp.domain.exceptions import (
    DegenerateFrameException, SubmanifoldOrthogonalityException, VelocityNormException, DimensionMismatchException
)
from kahlercomp.domain.models.kahler_chart import KahlerChart
from kahlercomp.domain.models.submanifold import SubmanifoldSpec

# Norm below which a vector is considered dependent on the previous ones
DEGENERACY_THRESHOLD = 1e-12
# Largest Hermitian product admitted between the radial direction and the tangent space of S
ORTHOGONALITY_TOLERANCE = 1e-8
UNIT_SPEED_TOLERANCE = 1e-8


def _metric_norm(metric: np.ndarray, vector: np.ndarray) -> float:
    return float(np.sqrt(max(np.real(vector @ metric @ vector.conj()), 0.0)))


def metric_gram_schmidt(metric: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """
    Modified Gram-Schmidt orthonormalization with respect to a Hermitian metric.

    :param metric: Hermitian metric g.
    :param vectors: Array whose rows are the vectors to orthonormalize, in order.
    :return: Array whose rows are orthonormal for g and span the same flag.
    :raise DegenerateFrameException if a vector depends on the previous ones.
    """
    basis = []
    for index, vector in enumerate(np.array(vectors, dtype=complex)):
        for element in basis:
            vector = vector - (vector @ metric @ element.conj()) * element
        norm = _metric_norm(metric, vector)
        if norm < DEGENERACY_THRESHOLD:
            raise DegenerateFrameException(index, norm)
        basis.append(vector / norm)
    return np.array(basis)


def adapted_initial_frame(
    chart: KahlerChart, spec: SubmanifoldSpec, velocity: np.ndarray, z0: Optional[np.ndarray] = None
) -> np.ndarray:
    """
    Build a unitary frame at the starting point of a geodesic normal to S, ordered as (radial e_1, normal block,
    tangent block).

    :param chart: Chart of the ambient space.
    :param spec: Submanifold S.
    :param velocity: Unit initial velocity of the geodesic, as (1,0)-components.
    :param z0: Starting point. The footpoint of S at the origin if None.
    :return: Array whose rows are the frame vectors.
    :raise VelocityNormException if the velocity does not have unit norm.
    :raise SubmanifoldOrthogonalityException if the velocity is not normal to S.
    """
    n = chart.complex_dim
    spec.check_dimension(n)
    point = chart.check_point(np.zeros(n) if z0 is None else z0)
    metric = chart.metric_at(point).entries
    velocity = np.asarray(velocity, dtype=complex)
    if velocity.shape != (n,):
        raise DimensionMismatchException((n,), velocity.shape)
    radial = np.sqrt(2) * velocity
    norm = _metric_norm(metric, radial)
    if abs(norm - 1) > UNIT_SPEED_TOLERANCE:
        raise VelocityNormException(norm)

    coordinates = np.eye(n, dtype=complex)
    tangent = np.zeros((0, n), dtype=complex)
    if spec.p > 0:
        tangent = metric_gram_schmidt(metric, coordinates[spec.tangent_indices])
        for vector in tangent:
            inner_product = abs(radial @ metric @ vector.conj())
            if inner_product > ORTHOGONALITY_TOLERANCE:
                raise SubmanifoldOrthogonalityException(float(inner_product))

    # Normal block: coordinate vectors with the largest component orthogonal to the frame built so far
    basis = [radial] + list(tangent)
    normal = []
    for _ in range(n - 1 - spec.p):
        residuals = []
        for candidate in coordinates:
            for element in basis:
                candidate = candidate - (candidate @ metric @ element.conj()) * element
            residuals.append(candidate)
        norms = [_metric_norm(metric, residual) for residual in residuals]
        best = int(np.argmax(norms))
        if norms[best] < DEGENERACY_THRESHOLD:
            raise DegenerateFrameException(len(normal) + 1, norms[best])
        vector = residuals[best] / norms[best]
        basis.append(vector)
        normal.append(vector)
    return np.array([radial] + normal + list(tangent))
