# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Comparison functions of the Hessian of the distance to a complex submanifold in a space with holomorphic bisectional
curvature bounded below by K. With u = K r^2 / 2:
    F = C(u) / r, G = (C(4u) - 2 C(u)) / r, H = -(u / r) S(u),
where C(u) = sqrt(u) cot(sqrt(u)) and S(u) = tan(sqrt(u)) / sqrt(u), continued by coth and tanh for u < 0.
"""

import numpy as np

from kahlercomp.domain.exceptions import RadiusException, ModelDiameterException
from kahlercomp.domain.models.hermitian import HermitianMatrix
from kahlercomp.domain.models.hessian import BoundFunctions, BoundMatrices
from kahlercomp.domain.models.submanifold import SubmanifoldSpec

# Below this |u|, C and S are evaluated by their Taylor series
SERIES_THRESHOLD = 1e-4


def _cot_factor(u: float) -> float:
    """
    C(u) = sqrt(u) cot(sqrt(u)).
    """
    if abs(u) < SERIES_THRESHOLD:
        return 1 - u / 3 - u ** 2 / 45 - 2 * u ** 3 / 945
    if u > 0:
        root = np.sqrt(u)
        return float(root / np.tan(root))
    root = np.sqrt(-u)
    return float(root / np.tanh(root))


def _tan_factor(u: float) -> float:
    """
    S(u) = tan(sqrt(u)) / sqrt(u).
    """
    if abs(u) < SERIES_THRESHOLD:
        return 1 + u / 3 + 2 * u ** 2 / 15 + 17 * u ** 3 / 315
    if u > 0:
        root = np.sqrt(u)
        return float(np.tan(root) / root)
    root = np.sqrt(-u)
    return float(np.tanh(root) / root)


def bound_functions(K: float, r: float) -> BoundFunctions:
    """
    Evaluate the comparison functions at a distance.

    :param K: Lower bound of the holomorphic bisectional curvature.
    :param r: Distance, strictly positive.
    :return: The values of F, G and H.
    :raise RadiusException if r is not strictly positive.
    :raise ModelDiameterException if K > 0 and sqrt(2 K) r >= pi.
    """
    if not r > 0:
        raise RadiusException(r)
    if K > 0 and np.sqrt(2 * K) * r >= np.pi:
        raise ModelDiameterException(K, r)
    u = K * r ** 2 / 2
    cot_factor = _cot_factor(u)
    return BoundFunctions(
        F=cot_factor / r,
        G=(_cot_factor(4 * u) - 2 * cot_factor) / r,
        H=-(u / r) * _tan_factor(u)
    )


def bound_at(K: float, t: float, n: int, spec: SubmanifoldSpec) -> BoundMatrices:
    """
    Assemble the bound of the mixed Hessian in the adapted frame ordering.

    :param K: Lower bound of the holomorphic bisectional curvature.
    :param t: Distance.
    :param n: Complex dimension of the ambient space.
    :param spec: Submanifold.
    :return: The bound diag(F + G/2, F I_(n-p-1), H I_p).
    """
    spec.check_dimension(n)
    functions = bound_functions(K, t)
    p = spec.p
    diagonal = [functions.F + functions.G / 2] + [functions.F] * (n - p - 1) + [functions.H] * p
    return BoundMatrices(t=t, K=K, p=p, functions=functions, bound_mixed=HermitianMatrix.diagonal(diagonal))


def laplacian_of_distance(K: float, r: float, n: int, p: int) -> float:
    """
    Complex Laplacian of the distance to a totally geodesic submanifold of a space form, trace of the bound:
    (n - p) F + G / 2 + p H.

    :param K: Curvature constant.
    :param r: Distance.
    :param n: Complex dimension.
    :param p: Complex dimension of the submanifold.
    :return: The Laplacian.
    """
    functions = bound_functions(K, r)
    return (n - p) * functions.F + functions.G / 2 + p * functions.H
