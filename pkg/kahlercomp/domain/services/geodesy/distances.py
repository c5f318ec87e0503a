# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Closed form distances in the complex space forms, under the normalization |d/dx|^2 = 2 g, for which the diameter of
CP^n with K = 1 is pi / sqrt(2).
"""

import numpy as np

from kahlercomp.domain.exceptions import ZeroVectorException, SubspaceDimensionException, UnsupportedDistanceException
from kahlercomp.domain.models.kahler_chart import KahlerChart, SpaceFormChart, ProductChart
from kahlercomp.domain.models.submanifold import SubmanifoldSpec, SubmanifoldKind


class SubspaceDistances:
    """
    Distances of a point of CP^n to the complementary linear subspaces P = span(e_0..e_s) and Q = span(e_s+1..e_n).
    """

    def __init__(self, r_P: float, r_Q: float):
        self.r_P = r_P
        self.r_Q = r_Q

    def __repr__(self):
        return f"SubspaceDistances(r_P={self.r_P}, r_Q={self.r_Q})"


def _check_positive_curvature(K: float):
    if not K > 0:
        raise UnsupportedDistanceException(f"K={K}", "projective distance")


def _as_nonzero_vector(vector, name: str) -> np.ndarray:
    array = np.asarray(vector, dtype=complex).reshape(-1)
    if not np.any(array != 0):
        raise ZeroVectorException(name)
    return array


def homogeneous_coordinates(z, K: float) -> np.ndarray:
    """
    Homogeneous coordinates [1 : sqrt(K) z] of a point of the affine chart of CP^n.
    """
    return np.concatenate([[1.0], np.sqrt(K) * np.asarray(z, dtype=complex)])


def distance_fs(n: int, K: float, z, w) -> float:
    """
    Fubini-Study distance between two points of CP^n given by homogeneous coordinates.

    :param n: Complex dimension.
    :param K: Curvature constant, strictly positive.
    :param z: Homogeneous coordinates of the first point, n + 1 values.
    :param w: Homogeneous coordinates of the second point, n + 1 values.
    :return: The distance sqrt(2 / K) arccos(|<z, w>| / (|z| |w|)).
    :raise ZeroVectorException if a vector is zero.
    """
    _check_positive_curvature(K)
    a = _as_nonzero_vector(z, "z")
    b = _as_nonzero_vector(w, "w")
    if a.shape != (n + 1,) or b.shape != (n + 1,):
        raise SubspaceDimensionException(max(a.shape[0], b.shape[0]) - 1, n)
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    inner_product = np.vdot(a, b)
    # The arctan form stays accurate for nearby points
    angle = np.arctan2(np.linalg.norm(b - inner_product * a), abs(inner_product))
    return float(np.sqrt(2 / K) * angle)


def distance_to_subspace(n: int, K: float, s: int, xi) -> SubspaceDistances:
    """
    Distances of a point of CP^n to the subspaces P spanned by the first s + 1 homogeneous coordinates and Q spanned by
    the others.

    :param n: Complex dimension.
    :param K: Curvature constant, strictly positive.
    :param s: Complex dimension of P, between 0 and n - 1.
    :param xi: Homogeneous coordinates of the point.
    :return: The distances to P and Q, which sum to pi / sqrt(2 K).
    :raise SubspaceDimensionException if s is out of range.
    :raise ZeroVectorException if xi is zero.
    """
    _check_positive_curvature(K)
    if not 0 <= s <= n - 1:
        raise SubspaceDimensionException(s, n)
    point = _as_nonzero_vector(xi, "xi")
    if point.shape != (n + 1,):
        raise SubspaceDimensionException(point.shape[0] - 1, n)
    norm_P = np.linalg.norm(point[:s + 1])
    norm_Q = np.linalg.norm(point[s + 1:])
    scale = np.sqrt(2 / K)
    return SubspaceDistances(
        r_P=float(scale * np.arctan2(norm_Q, norm_P)),
        r_Q=float(scale * np.arctan2(norm_P, norm_Q))
    )


def _space_form_radial_distance(K: float, rho: float) -> float:
    """
    Distance from the origin of a space form chart to a point of modulus rho.
    """
    if K > 0:
        return float(np.sqrt(2 / K) * np.arctan(np.sqrt(K) * rho))
    if K < 0:
        return float(np.sqrt(-2 / K) * np.arctanh(np.sqrt(-K) * rho))
    return float(np.sqrt(2) * rho)


def _space_form_distance(chart: SpaceFormChart, spec: SubmanifoldSpec, z: np.ndarray) -> float:
    K = chart.K
    if spec.kind == SubmanifoldKind.POINT:
        return _space_form_radial_distance(K, float(np.linalg.norm(z)))
    normal = float(np.linalg.norm(z[spec.normal_indices(chart.complex_dim)]))
    tangent = float(np.linalg.norm(z[spec.tangent_indices]))
    if K > 0:
        return float(np.sqrt(2 / K) * np.arctan2(np.sqrt(K) * normal, np.sqrt(1 + K * tangent ** 2)))
    if K < 0:
        return float(np.sqrt(-2 / K) * np.arctanh(np.sqrt(-K) * normal / np.sqrt(1 + K * tangent ** 2)))
    return float(np.sqrt(2) * normal)


def closed_form_distance(chart: KahlerChart, spec: SubmanifoldSpec, z) -> float:
    """
    Distance from a chart point to a submanifold, when a closed form exists: the origin or a linear subvariety of a
    space form, or the origin of a product of space forms.

    :param chart: Chart of the ambient space.
    :param spec: Submanifold.
    :param z: Chart point.
    :return: The distance.
    :raise UnsupportedDistanceException if no closed form is available.
    """
    point = chart.check_point(z)
    spec.check_dimension(chart.complex_dim)
    if isinstance(chart, SpaceFormChart):
        return _space_form_distance(chart, spec, point)
    if isinstance(chart, ProductChart) and spec.kind == SubmanifoldKind.POINT:
        squared = [
            _space_form_radial_distance(factor.K, float(np.linalg.norm(point[block]))) ** 2
            for factor, block in zip(chart.factors, chart.factor_slices)
        ]
        return float(np.sqrt(sum(squared)))
    raise UnsupportedDistanceException(chart.name, str(spec))


def footpoint(chart: KahlerChart, spec: SubmanifoldSpec, z) -> np.ndarray:
    """
    Nearest point of a submanifold to a chart point, for the cases handled by closed_form_distance.

    :param chart: Chart of the ambient space.
    :param spec: Submanifold.
    :param z: Chart point.
    :return: The footpoint.
    :raise UnsupportedDistanceException if the footpoint is not known in closed form.
    """
    point = chart.check_point(z)
    if isinstance(chart, SpaceFormChart):
        return spec.footpoint(point)
    if isinstance(chart, ProductChart) and spec.kind == SubmanifoldKind.POINT:
        return np.zeros(chart.complex_dim, dtype=complex)
    raise UnsupportedDistanceException(chart.name, str(spec))
