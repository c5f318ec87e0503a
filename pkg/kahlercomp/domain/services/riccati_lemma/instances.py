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
from scipy.stats import unitary_group

from kahlercomp.domain.exceptions import DimensionMismatchException
from kahlercomp.domain.models.hermitian import HermitianMatrix
from kahlercomp.domain.models.riccati import RiccatiInstance, MatrixCurve

MAXIMUM_DIM = 4
DEFAULT_T0 = 1e-4
DEFAULT_T = 1.0


class ConstantCurve:
    """
    Constant Hermitian curve.
    """

    def __init__(self, value):
        self.value = np.array(value, dtype=complex)

    def __call__(self, t: float) -> np.ndarray:
        return self.value


class RotatingSpectrumCurve:
    """
    Curve Q(t) diag(lambda(t)) Q(t)* where Q(t) = exp(t S) Q0 for a skew-Hermitian S, and the eigenvalues oscillate
    as lambda_i(t) = a_i + b_i sin(c_i t).
    """

    def __init__(
        self, rotation: np.ndarray, generator: np.ndarray, centers: np.ndarray, amplitudes: np.ndarray,
        frequencies: np.ndarray
    ):
        """
        Initialize the curve.

        :param rotation: Unitary matrix Q0.
        :param generator: Skew-Hermitian matrix S.
        :param centers: Values a_i.
        :param amplitudes: Values b_i.
        :param frequencies: Values c_i.
        """
        self.rotation = rotation
        # exp(t S) = V diag(exp(i t theta)) V* with S = V diag(i theta) V*
        self._angles, self._basis = np.linalg.eigh(-1j * generator)
        self.centers = centers
        self.amplitudes = amplitudes
        self.frequencies = frequencies

    def unitary(self, t: float) -> np.ndarray:
        exponential = (self._basis * np.exp(1j * t * self._angles)) @ self._basis.conj().T
        return exponential @ self.rotation

    def __call__(self, t: float) -> np.ndarray:
        unitary = self.unitary(t)
        spectrum = self.centers + self.amplitudes * np.sin(self.frequencies * t)
        return (unitary * spectrum) @ unitary.conj().T


class PositiveShiftCurve:
    """
    Curve R(t) + M(t) M(t)* with M(t) = M0 + t M1, above R(t) in the Loewner order.
    """

    def __init__(self, base: MatrixCurve, constant: np.ndarray, slope: np.ndarray):
        self.base = base
        self.constant = constant
        self.slope = slope

    def __call__(self, t: float) -> np.ndarray:
        shift = self.constant + t * self.slope
        return self.base(t) + shift @ shift.conj().T


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _skew_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    matrix = _complex_gaussian(rng, (n, n))
    return (matrix - matrix.conj().T) / 2


def singular_seed(rng: np.random.Generator, n: int, t0: float) -> HermitianMatrix:
    """
    Seed P / t0 + S with P a random orthogonal projection of rank at least 1 and S a random positive semi definite
    matrix of norm at most 1.
    """
    rank = int(rng.integers(1, n + 1))
    basis = unitary_group.rvs(n, random_state=rng) if n > 1 else np.eye(1, dtype=complex)
    projection = basis[:, :rank] @ basis[:, :rank].conj().T
    square_root = _complex_gaussian(rng, (n, n))
    bounded = square_root @ square_root.conj().T
    bounded = bounded / max(np.linalg.norm(bounded, 2), 1.0)
    seed = projection / t0 + bounded
    return HermitianMatrix((seed + seed.conj().T) / 2)


def generate_instance(
    suite_seed: int, index: int, n: Optional[int] = None, T: float = DEFAULT_T, t0: float = DEFAULT_T0,
    reversed_hypothesis: bool = False, max_dim: int = MAXIMUM_DIM
) -> RiccatiInstance:
    """
    Draw a random instance from the stream seeded by (suite_seed, index).
    R_A rotates a spectrum in [-1/2, 1] and R_B adds a smooth positive semi definite shift to it.

    :param suite_seed: Seed of the suite.
    :param index: Index of the instance in the suite.
    :param n: Dimension, drawn between 1 and max_dim if None.
    :param T: End time.
    :param t0: Seed time.
    :param reversed_hypothesis: If True, R_A and R_B are exchanged so that the hypothesis fails.
    :param max_dim: Largest dimension drawn, at most MAXIMUM_DIM.
    :return: The instance.
    :raise DimensionMismatchException if n is not between 1 and MAXIMUM_DIM.
    """
    rng = np.random.default_rng([suite_seed, index])
    if n is None:
        n = int(rng.integers(1, min(max_dim, MAXIMUM_DIM) + 1))
    if not 1 <= n <= MAXIMUM_DIM:
        raise DimensionMismatchException((MAXIMUM_DIM,), (n,))
    rotation = unitary_group.rvs(n, random_state=rng) if n > 1 else np.eye(1, dtype=complex)
    lower = RotatingSpectrumCurve(
        rotation=rotation,
        generator=_skew_hermitian(rng, n),
        centers=rng.uniform(0.0, 0.5, n),
        amplitudes=rng.uniform(0.0, 0.5, n),
        frequencies=rng.uniform(0.5, 3.0, n)
    )
    upper = PositiveShiftCurve(lower, _complex_gaussian(rng, (n, n)) / 2, _complex_gaussian(rng, (n, n)) / 2)
    seed = singular_seed(rng, n, t0)
    if reversed_hypothesis:
        lower, upper = upper, lower
    return RiccatiInstance(index=index, n=n, T=T, t0=t0, R_A=lower, R_B=upper, seed=seed, singular_seed=True)
