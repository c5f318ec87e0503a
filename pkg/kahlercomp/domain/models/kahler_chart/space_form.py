# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import numpy as np

from .chart import KahlerChart, SpaceLabel


def space_form_label(K: float) -> SpaceLabel:
    """
    Label of the space form with holomorphic sectional curvature 2K.
    """
    if K > 0:
        return SpaceLabel.FUBINI_STUDY
    if K < 0:
        return SpaceLabel.COMPLEX_HYPERBOLIC
    return SpaceLabel.FLAT


class SpaceFormChart(KahlerChart):
    """
    Affine chart of a complex space form with constant holomorphic sectional curvature 2K.

    The potential is log(1 + K |z|^2) / K, reducing to |z|^2 when K = 0, on the domain 1 + K |z|^2 > 0. It gives the
    Fubini-Study metric of CP^n when K > 0, the flat metric of C^n when K = 0 and the Bergman ball metric of complex
    hyperbolic space when K < 0. The metric and its derivatives are evaluated in closed form.
    """

    def __init__(self, complex_dim: int, K: float):
        """
        Initialize the chart.

        :param complex_dim: Complex dimension n.
        :param K: Curvature constant.
        """
        super().__init__(complex_dim, space_form_label(K))
        self.K = float(K)

    @property
    def curvature_constant(self) -> float:
        return self.K

    @property
    def name(self) -> str:
        return f"{self.label.value}(n={self.complex_dim},K={self.K:g})"

    def _conformal_factor(self, z: np.ndarray):
        return 1 + self.K * np.real(np.vdot(z, z))

    def potential(self, z: np.ndarray) -> float:
        squared_norm = float(np.real(np.vdot(z, z)))
        if self.K == 0:
            return squared_norm
        return float(np.log1p(self.K * squared_norm) / self.K)

    def in_domain(self, z: np.ndarray) -> bool:
        return bool(self._conformal_factor(z) > 0)

    def metric_array(self, z: np.ndarray) -> np.ndarray:
        w = self._conformal_factor(z)
        return np.eye(self.complex_dim) / w - self.K * np.outer(z.conj(), z) / w ** 2

    def metric_derivatives(self, z: np.ndarray) -> np.ndarray:
        K = self.K
        w = self._conformal_factor(z)
        eye = np.eye(self.complex_dim)
        zb = z.conj()
        return (
            -K * np.einsum("ij,k->kij", eye, zb) / w ** 2
            - K * np.einsum("i,jk->kij", zb, eye) / w ** 2
            + 2 * K ** 2 * np.einsum("i,j,k->kij", zb, z, zb) / w ** 3
        )

    def metric_second_derivatives(self, z: np.ndarray) -> np.ndarray:
        K = self.K
        w = self._conformal_factor(z)
        eye = np.eye(self.complex_dim)
        zb = z.conj()
        return (
            -K * (np.einsum("ij,kl->klij", eye, eye) + np.einsum("il,jk->klij", eye, eye)) / w ** 2
            + 2 * K ** 2 * (
                np.einsum("ij,k,l->klij", eye, zb, z)
                + np.einsum("jk,i,l->klij", eye, zb, z)
                + np.einsum("il,j,k->klij", eye, z, zb)
                + np.einsum("kl,i,j->klij", eye, zb, z)
            ) / w ** 3
            - 6 * K ** 3 * np.einsum("i,j,k,l->klij", zb, z, zb, z) / w ** 4
        )

    def volume_density(self, points: np.ndarray) -> np.ndarray:
        """
        Closed form 2^n det g = 2^n (1 + K |z|^2)^-(n + 1).
        """
        points = np.asarray(points, dtype=complex).reshape(-1, self.complex_dim)
        w = 1 + self.K * np.sum(np.abs(points) ** 2, axis=1)
        return 2 ** self.complex_dim * w ** -(self.complex_dim + 1)
