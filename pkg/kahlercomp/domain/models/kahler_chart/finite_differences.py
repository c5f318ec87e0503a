# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Fourth-order central finite differences in the real coordinates (x_1..x_n, y_1..y_n) of a complex chart, and the
Wirtinger derivatives built from them.
"""

from typing import Callable, Tuple

import numpy as np

# Five-point stencil offsets and weights
STENCIL_OFFSETS = (-2, -1, 1, 2)
FIRST_DERIVATIVE_WEIGHTS = (1 / 12, -2 / 3, 2 / 3, -1 / 12)
SECOND_DERIVATIVE_WEIGHTS = (-1 / 12, 4 / 3, 4 / 3, -1 / 12)
SECOND_DERIVATIVE_CENTER_WEIGHT = -5 / 2


def stencil_points(z: np.ndarray, h: float) -> np.ndarray:
    """
    All the points visited by real_hessian around z.

    :param z: Center of the stencil.
    :param h: Step.
    :return: Array of shape (m, n) of complex points.
    """
    n = z.shape[0]
    directions = np.concatenate([np.eye(n), 1j * np.eye(n)])
    points = [z]
    for p in range(2 * n):
        for i in STENCIL_OFFSETS:
            points.append(z + i * h * directions[p])
            for q in range(p + 1, 2 * n):
                for j in STENCIL_OFFSETS:
                    points.append(z + i * h * directions[p] + j * h * directions[q])
    return np.array(points)


def real_gradient(f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float) -> np.ndarray:
    """
    Derivatives of f along the 2n real coordinates.

    :param f: Scalar or array valued function of a complex point.
    :param z: Point of shape (n,).
    :param h: Step.
    :return: Array of shape (2n,) + shape of f(z).
    """
    n = z.shape[0]
    directions = np.concatenate([np.eye(n), 1j * np.eye(n)])
    derivatives = []
    for direction in directions:
        derivatives.append(
            sum(w * np.asarray(f(z + i * h * direction)) for i, w in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS)) / h
        )
    return np.array(derivatives)


def real_hessian(f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float) -> np.ndarray:
    """
    Second derivatives of f along the 2n real coordinates.
    Mixed partials are nested first-derivative stencils, computed once per pair so that the result is exactly
    symmetric.

    :param f: Scalar or array valued function of a complex point.
    :param z: Point of shape (n,).
    :param h: Step.
    :return: Array of shape (2n, 2n) + shape of f(z).
    """
    n = z.shape[0]
    directions = np.concatenate([np.eye(n), 1j * np.eye(n)])
    center = np.asarray(f(z))
    hessian = np.zeros((2 * n, 2 * n) + center.shape, dtype=np.result_type(center, float))
    for p in range(2 * n):
        value = SECOND_DERIVATIVE_CENTER_WEIGHT * center
        for i, w in zip(STENCIL_OFFSETS, SECOND_DERIVATIVE_WEIGHTS):
            value = value + w * np.asarray(f(z + i * h * directions[p]))
        hessian[p, p] = value / h ** 2
        for q in range(p + 1, 2 * n):
            value = 0
            for i, wi in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS):
                for j, wj in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS):
                    value = value + wi * wj * np.asarray(f(z + i * h * directions[p] + j * h * directions[q]))
            hessian[p, q] = value / h ** 2
            hessian[q, p] = hessian[p, q]
    return hessian


def wirtinger_gradient(f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float) -> np.ndarray:
    """
    Holomorphic derivatives d f / d z_a = (d/dx_a - i d/dy_a) f / 2.

    :return: Array of shape (n,) + shape of f(z).
    """
    n = z.shape[0]
    gradient = real_gradient(f, z, h)
    return (gradient[:n] - 1j * gradient[n:]) / 2


def wirtinger_hessians(
    f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Mixed and holomorphic second Wirtinger derivatives of f.

    :param f: Scalar or array valued function of a complex point.
    :param z: Point of shape (n,).
    :param h: Step.
    :return: Tuple (mixed, holomorphic) with mixed[a, b] = d^2 f / dz_a dzbar_b and
             holomorphic[a, b] = d^2 f / dz_a dz_b.
    """
    n = z.shape[0]
    hessian = real_hessian(f, z, h)
    h_xx = hessian[:n, :n]
    h_yy = hessian[n:, n:]
    h_xy = hessian[:n, n:]
    h_yx = hessian[n:, :n]
    mixed = (h_xx + h_yy + 1j * (h_xy - h_yx)) / 4
    holomorphic = (h_xx - h_yy - 1j * (h_xy + h_yx)) / 4
    return mixed, holomorphic


def planar_derivatives(
    f: Callable[[np.ndarray], np.ndarray], z: np.ndarray, h: float
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorized derivatives of a real function on a one dimensional chart, evaluated at an array of points.

    :param f: Function mapping a complex array to a real array of the same shape.
    :param z: Complex array of evaluation points.
    :param h: Step.
    :return: Tuple (f_x, f_y, f_xx, f_yy, f_xy).
    """
    center = f(z)
    f_x = sum(w * f(z + i * h) for i, w in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS)) / h
    f_y = sum(w * f(z + 1j * i * h) for i, w in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS)) / h
    f_xx = (
        SECOND_DERIVATIVE_CENTER_WEIGHT * center
        + sum(w * f(z + i * h) for i, w in zip(STENCIL_OFFSETS, SECOND_DERIVATIVE_WEIGHTS))
    ) / h ** 2
    f_yy = (
        SECOND_DERIVATIVE_CENTER_WEIGHT * center
        + sum(w * f(z + 1j * i * h) for i, w in zip(STENCIL_OFFSETS, SECOND_DERIVATIVE_WEIGHTS))
    ) / h ** 2
    f_xy = sum(
        wi * wj * f(z + i * h + 1j * j * h)
        for i, wi in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS)
        for j, wj in zip(STENCIL_OFFSETS, FIRST_DERIVATIVE_WEIGHTS)
    ) / h ** 2
    return f_x, f_y, f_xx, f_yy, f_xy
