# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from abc import ABC, abstractmethod
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np

from kahlercomp.domain.exceptions import (
    ChartDomainException, NonPositiveMetricException, NonUnitaryFrameException, DimensionMismatchException,
    NonFiniteValueException, BasePointMismatchException
)
from kahlercomp.domain.models.hermitian import (
    HermitianMatrix, SymmetricComplexMatrix, hermitian_eigenvalues, RAW_ASYMMETRY_THRESHOLD
)
from .finite_differences import wirtinger_hessians, wirtinger_gradient

# Largest |E g E* - I| admitted for a unitary frame
FRAME_UNITARITY_TOLERANCE = 1e-10
# Finite difference steps of the generic path (metric, then derivatives of the metric)
DEFAULT_METRIC_STEP = 1e-3
DEFAULT_CURVATURE_STEP = 1e-2


class SpaceLabel(Enum):
    """
    Identifier of the space represented by a chart.
    """
    FLAT = "flat"
    FUBINI_STUDY = "fubini_study"
    COMPLEX_HYPERBOLIC = "complex_hyperbolic"
    PRODUCT = "product"
    POTENTIAL = "potential"


class TangentVector10:
    """
    A (1,0)-vector given by its components in chart coordinates, based at a chart point.
    """

    def __init__(self, base_point: Sequence[complex], components: Sequence[complex]):
        """
        Initialize the vector.

        :param base_point: Chart point where the vector is based.
        :param components: Components along d/dz_1, ..., d/dz_n.
        :raise DimensionMismatchException if the base point and the components do not have the same length.
        """
        self.base_point = np.array(base_point, dtype=complex)
        self.components = np.array(components, dtype=complex)
        if self.base_point.shape != self.components.shape or self.base_point.ndim != 1:
            raise DimensionMismatchException(self.base_point.shape, self.components.shape)

    def __repr__(self):
        return f"TangentVector10(base_point={self.base_point.tolist()}, components={self.components.tolist()})"


class CurvatureSlice:
    """
    Curvature components entering the Hessian evolution, in a unitary frame whose first vector is radial.

    :param R_mixed: Matrix of R(e_a, conj(e_b), e_1, conj(e_1)).
    :param R_holo: Matrix of R(e_a, conj(e_1), e_b, conj(e_1)).
    """

    def __init__(self, R_mixed: HermitianMatrix, R_holo: SymmetricComplexMatrix):
        self.R_mixed = R_mixed
        self.R_holo = R_holo

    def __repr__(self):
        return f"CurvatureSlice(R_mixed={self.R_mixed}, R_holo={self.R_holo})"


class KahlerChart(ABC):
    """
    Kahler metric on one holomorphic chart, defined by a potential.

    The metric is g[i, j] = d^2 potential / dz_i dzbar_j. When a subclass does not provide the derivatives of the
    metric in closed form, they are obtained by fourth-order central finite differences of the potential.

    Curvature follows the convention R[i, j, k, l] = -d_k dbar_l g[i, j] + g^{q p} d_k g[i, q] dbar_l g[p, j], under
    which R[i, j, k, l] = K (g[i, j] g[k, l] + g[i, l] g[k, j]) on a space of constant holomorphic sectional
    curvature 2K.
    """

    def __init__(
        self, complex_dim: int, label: SpaceLabel, metric_step: float = DEFAULT_METRIC_STEP,
        curvature_step: float = DEFAULT_CURVATURE_STEP, asymmetry_tolerance: float = RAW_ASYMMETRY_THRESHOLD
    ):
        """
        Initialize the chart.

        :param complex_dim: Complex dimension n of the chart.
        :param label: Identifier of the space.
        :param metric_step: Finite difference step used to derive the metric from the potential.
        :param curvature_step: Finite difference step used to derive the metric.
        :param asymmetry_tolerance: Relative asymmetry admitted on curvature slices.
        """
        self.complex_dim = complex_dim
        self.label = label
        self.metric_step = metric_step
        self.curvature_step = curvature_step
        self.asymmetry_tolerance = asymmetry_tolerance

    @property
    def name(self) -> str:
        return self.label.value

    @property
    def curvature_constant(self) -> Optional[float]:
        """
        Constant K such that the holomorphic sectional curvature is 2K, if the chart is a space form.
        """
        return None

    @abstractmethod
    def potential(self, z: np.ndarray) -> float:
        """
        Evaluate the Kahler potential.

        :param z: Chart point.
        :return: The potential value.
        """
        pass

    @abstractmethod
    def in_domain(self, z: np.ndarray) -> bool:
        """
        Determine if a point belongs to the chart domain.

        :param z: Chart point.
        :return: True if the point is admitted.
        """
        pass

    def check_point(self, z: Union[Sequence[complex], np.ndarray]) -> np.ndarray:
        """
        Convert a point into a complex array and check it belongs to the chart.

        :param z: Chart point.
        :return: The point as a complex array.
        :raise DimensionMismatchException if the point does not have n coordinates.
        :raise NonFiniteValueException if a coordinate is not finite.
        :raise ChartDomainException if the point is outside the chart domain.
        """
        point = np.array(z, dtype=complex).reshape(-1)
        if point.shape != (self.complex_dim,):
            raise DimensionMismatchException((self.complex_dim,), point.shape)
        if not np.all(np.isfinite(point)):
            raise NonFiniteValueException("chart point")
        if not self.in_domain(point):
            raise ChartDomainException(self.name, point.tolist())
        return point

    def metric_array(self, z: np.ndarray) -> np.ndarray:
        """
        Metric g[i, j] as a raw array, without domain checks.
        """
        mixed, _ = wirtinger_hessians(self.potential, z, self.metric_step)
        return mixed

    def metric_derivatives(self, z: np.ndarray) -> np.ndarray:
        """
        Holomorphic derivatives dG[k, i, j] = d_k g[i, j], without domain checks.
        """
        return wirtinger_gradient(self.metric_array, z, self.curvature_step)

    def metric_second_derivatives(self, z: np.ndarray) -> np.ndarray:
        """
        Mixed derivatives ddG[k, l, i, j] = d_k dbar_l g[i, j], without domain checks.
        """
        mixed, _ = wirtinger_hessians(self.metric_array, z, self.curvature_step)
        return mixed

    def christoffel_array(self, z: np.ndarray) -> np.ndarray:
        """
        Christoffel symbols gamma[c, a, b] = g^{c d} d_a g[b, d], without domain checks.
        """
        inverse = np.linalg.inv(self.metric_array(z))
        return np.einsum("dc,abd->cab", inverse, self.metric_derivatives(z))

    def curvature_tensor_array(self, z: np.ndarray) -> np.ndarray:
        """
        Curvature tensor R[i, j, k, l], without domain checks.
        """
        inverse = np.linalg.inv(self.metric_array(z))
        derivatives = self.metric_derivatives(z)
        second_derivatives = self.metric_second_derivatives(z)
        return (
            -np.einsum("klij->ijkl", second_derivatives)
            + np.einsum("qp,kiq,ljp->ijkl", inverse, derivatives, derivatives.conj())
        )

    def metric_at(self, z) -> HermitianMatrix:
        """
        Evaluate the metric at a point.

        :param z: Chart point.
        :return: The positive definite Hermitian metric matrix.
        :raise ChartDomainException if the point is outside the chart domain.
        :raise NonPositiveMetricException if the metric is not positive definite.
        """
        point = self.check_point(z)
        metric = HermitianMatrix(self.metric_array(point))
        min_eigenvalue = hermitian_eigenvalues(metric)[0]
        if min_eigenvalue <= 0:
            raise NonPositiveMetricException(self.name, float(min_eigenvalue))
        return metric

    def christoffel_at(self, z) -> np.ndarray:
        """
        Evaluate the Christoffel symbols at a point.

        :param z: Chart point.
        :return: Array gamma[c, a, b], symmetric in (a, b).
        """
        self.metric_at(z)
        return self.christoffel_array(self.check_point(z))

    def curvature_tensor_at(self, z) -> np.ndarray:
        """
        Evaluate the curvature tensor at a point.

        :param z: Chart point.
        :return: Array R[i, j, k, l].
        """
        self.metric_at(z)
        return self.curvature_tensor_array(self.check_point(z))

    def _check_vector(self, point: np.ndarray, vector: TangentVector10) -> np.ndarray:
        if vector.components.shape != (self.complex_dim,):
            raise DimensionMismatchException((self.complex_dim,), vector.components.shape)
        if not np.allclose(vector.base_point, point, rtol=0, atol=1e-12):
            raise BasePointMismatchException(vector.base_point.tolist(), point.tolist())
        return vector.components

    def hermitian_product(self, z, x: np.ndarray, y: np.ndarray) -> complex:
        """
        Hermitian product <X, conj(Y)> = g[a, b] X_a conj(Y_b) of two (1,0)-vectors given by their components.
        """
        point = self.check_point(z)
        return complex(np.asarray(x) @ self.metric_array(point) @ np.conj(y))

    def riemannian_norm(self, z, v: np.ndarray) -> float:
        """
        Norm of the real tangent vector whose (1,0)-part has components v: |v|^2 = 2 g[a, b] v_a conj(v_b).
        """
        return float(np.sqrt(2 * np.real(self.hermitian_product(z, v, v))))

    def curvature_at(self, z, x: TangentVector10, y: TangentVector10) -> complex:
        """
        Evaluate R(X, conj(X), Y, conj(Y)).

        :param z: Chart point.
        :param x: First (1,0)-vector, based at z.
        :param y: Second (1,0)-vector, based at z.
        :return: The bisectional curvature numerator (real up to roundoff).
        """
        point = self.check_point(z)
        xc = self._check_vector(point, x)
        yc = self._check_vector(point, y)
        tensor = self.curvature_tensor_at(point)
        return complex(np.einsum("ijkl,i,j,k,l->", tensor, xc, xc.conj(), yc, yc.conj()))

    def ricci_at(self, z) -> HermitianMatrix:
        """
        Ricci form Ric[a, b] = g^{c d} R[a, b, c, d] at a point.
        """
        point = self.check_point(z)
        inverse = np.linalg.inv(self.metric_at(point).entries)
        tensor = self.curvature_tensor_array(point)
        return HermitianMatrix(np.einsum("dc,abcd->ab", inverse, tensor), max_asymmetry=self.asymmetry_tolerance)

    def scalar_curvature_at(self, z) -> float:
        """
        Scalar curvature g^{b a} Ric[a, b], equal to n (n + 1) K on a space form.
        """
        point = self.check_point(z)
        inverse = np.linalg.inv(self.metric_array(point))
        return float(np.real(np.einsum("ba,ab->", inverse, self.ricci_at(point).entries)))

    def unitarity_residual(self, z, frame: np.ndarray) -> float:
        """
        Largest entry of |E g E* - I| for a frame E whose rows are the frame vectors.
        """
        point = self.check_point(z)
        frame = np.asarray(frame, dtype=complex)
        if frame.shape != (self.complex_dim, self.complex_dim):
            raise DimensionMismatchException((self.complex_dim, self.complex_dim), frame.shape)
        gram = frame @ self.metric_array(point) @ frame.conj().T
        return float(np.max(np.abs(gram - np.eye(self.complex_dim))))

    def curvature_slice_in_frame(self, z, frame: np.ndarray) -> CurvatureSlice:
        """
        Express the curvature entering the Hessian evolution in a unitary frame.

        :param z: Chart point.
        :param frame: Array whose rows are the frame vectors e_1, ..., e_n, e_1 being radial.
        :return: The curvature slice.
        :raise NonUnitaryFrameException if the frame is not unitary to 1e-10.
        """
        point = self.check_point(z)
        residual = self.unitarity_residual(point, frame)
        if residual > FRAME_UNITARITY_TOLERANCE:
            raise NonUnitaryFrameException(residual, FRAME_UNITARITY_TOLERANCE)
        frame = np.asarray(frame, dtype=complex)
        tensor = self.curvature_tensor_array(point)
        radial = frame[0]
        mixed = np.einsum("ijkl,ai,bj,k,l->ab", tensor, frame, frame.conj(), radial, radial.conj())
        holo = np.einsum("ijkl,ai,j,bk,l->ab", tensor, frame, radial.conj(), frame, radial.conj())
        return CurvatureSlice(
            R_mixed=HermitianMatrix(mixed, max_asymmetry=self.asymmetry_tolerance),
            R_holo=SymmetricComplexMatrix(holo, max_asymmetry=self.asymmetry_tolerance)
        )

    def volume_density(self, points: np.ndarray) -> np.ndarray:
        """
        Riemannian volume density 2^n det g with respect to the Lebesgue measure of the chart.

        :param points: Array of shape (m, n) of chart points.
        :return: Array of shape (m,) of densities.
        """
        points = np.asarray(points, dtype=complex).reshape(-1, self.complex_dim)
        return np.array(
            [2 ** self.complex_dim * np.real(np.linalg.det(self.metric_array(point))) for point in points]
        )
