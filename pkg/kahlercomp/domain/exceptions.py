# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import traceback
import re
from typing import List, Tuple, Optional


class KahlerCompException(Exception):
    """
    Generic type of Exception generated by this library.
    """
    pass


class KahlerCompExternalException(KahlerCompException):
    """
    Exception external to kahlercomp mapped to a kahlercomp exception for formatting.
    """
    def __init__(self, exception_type, exception_value, exception_traceback):
        """
        Initialization.

        :param exception_type: Type of exception.
        :param exception_value: Value of exception.
        :param exception_traceback: Traceback of exception.
        """
        self.exception_type = exception_type
        self.exception_value = exception_value
        self.exception_traceback = exception_traceback

    def __str__(self):
        """
        Return a string representation of the external exception.
        """
        msg = f"An exception of type {self.exception_type.__qualname__} occurred"
        value = str(self.exception_value)
        if value != "":
            msg = f"{msg}: {value}"
        if self.exception_traceback is not None:
            tb = traceback.format_tb(self.exception_traceback)[-1].strip().replace("\n", ":")
            tb = re.sub("\\s+", " ", tb)
            msg = f"{msg} - Traceback: {tb}."
        return msg


class KahlerCompExceptionList(KahlerCompException):
    """
    List of kahlercomp exceptions.
    """

    def __init__(self, exceptions: List[KahlerCompException] = None):
        """
        Initialization.
        """
        self.exceptions = exceptions if exceptions is not None else []

    def __str__(self):
        """
        Return a string representation of the list of exceptions.
        """
        if len(self.exceptions) == 0:
            return super().__str__()
        elif len(self.exceptions) == 1:
            return str(self.exceptions[0])
        else:
            description = "\n".join([f"\t{e.__class__.__qualname__} : {e}" for e in self.exceptions])
            return f"{len(self.exceptions)} exception(s) were encountered:\n{description}"

    def append(self, exception: KahlerCompException):
        """
        Append an exception to the list.

        :param exception: The exception to append.
        """
        self.exceptions.append(exception)


class KahlerCompExceptionCollector:
    """
    Collector of exceptions.
    Gathers them in a list, and raise a KahlerCompExceptionList with these errors on demand.
    """
    def __init__(self):
        """
        Initialize the collector with an empty list.
        """
        self._exceptions: List[KahlerCompException] = list()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        if exc_value is None:
            # No error observed
            return True
        if isinstance(exc_value, KahlerCompExceptionList):
            self._exceptions += exc_value.exceptions
        elif isinstance(exc_value, KahlerCompException):
            self._exceptions.append(exc_value)
        else:
            self._exceptions.append(KahlerCompExternalException(exc_type, exc_value, traceback))
        # Do not propagate exception
        return True

    def contains_exceptions(self) -> bool:
        """
        Determine if the collector contains one or several exceptions.

        :return: True if some exceptions were collected.
        """
        return len(self._exceptions) > 0

    def raise_for_exception(self):
        """
        Raise a KahlerCompExceptionList if exceptions were collected.
        """
        if len(self._exceptions) > 0:
            raise KahlerCompExceptionList(self._exceptions)

    def add(self, exception: KahlerCompException):
        """
        Add an exception to the collector.

        :param exception: The exception to add.
        """
        self._exceptions.append(exception)

    def reset(self):
        """
        Empty the list of exceptions.
        """
        self._exceptions.clear()


class DimensionMismatchException(KahlerCompException):
    """
    Exception raised when two operands do not have compatible dimensions.
    """

    def __init__(self, expected: Tuple[int, ...], actual: Tuple[int, ...]):
        """
        Initialization.

        :param expected: Expected shape.
        :param actual: Shape that was received.
        """
        self.expected = tuple(expected)
        self.actual = tuple(actual)

    def __str__(self) -> str:
        return f"Dimension mismatch: expected shape {self.expected}, got {self.actual}."


class NonFiniteValueException(KahlerCompException):
    """
    Exception raised when a NaN or infinite value enters a public operation.
    """

    def __init__(self, quantity: str):
        """
        Initialization.

        :param quantity: Name of the quantity containing non-finite values.
        """
        self.quantity = quantity

    def __str__(self) -> str:
        return f"Non-finite value found in {self.quantity}."


class HermitianAsymmetryException(KahlerCompException):
    """
    Exception raised when a matrix presented as Hermitian is too far from its conjugate transpose.
    """

    def __init__(self, relative_asymmetry: float, threshold: float):
        """
        Initialization.

        :param relative_asymmetry: Measured value of |M - M*| / |M|.
        :param threshold: Admissible relative asymmetry.
        """
        self.relative_asymmetry = relative_asymmetry
        self.threshold = threshold

    def __str__(self) -> str:
        return (
            f"Matrix is not Hermitian: relative asymmetry {self.relative_asymmetry:.3e} exceeds "
            f"{self.threshold:.1e}."
        )


class SymmetryException(KahlerCompException):
    """
    Exception raised when a matrix presented as complex symmetric is too far from its transpose.
    """

    def __init__(self, relative_asymmetry: float, threshold: float):
        """
        Initialization.

        :param relative_asymmetry: Measured value of |M - M^T| / |M|.
        :param threshold: Admissible relative asymmetry.
        """
        self.relative_asymmetry = relative_asymmetry
        self.threshold = threshold

    def __str__(self) -> str:
        return (
            f"Matrix is not symmetric: relative asymmetry {self.relative_asymmetry:.3e} exceeds "
            f"{self.threshold:.1e}."
        )


class EigenvalueConvergenceException(KahlerCompException):
    """
    Exception raised when the Hermitian eigensolver does not converge.
    """

    def __init__(self, iterations: int, reason: str):
        """
        Initialization.

        :param iterations: Number of off-diagonal elements that failed to converge, as reported by LAPACK.
        :param reason: Message of the underlying solver.
        """
        self.iterations = iterations
        self.reason = reason

    def __str__(self) -> str:
        return f"Eigenvalue computation did not converge ({self.iterations} unconverged elements): {self.reason}"


class EigenvalueResidualException(KahlerCompException):
    """
    Exception raised when an eigenpair does not satisfy its defining equation accurately enough.
    """

    def __init__(self, residual: float, threshold: float):
        """
        Initialization.

        :param residual: Largest |Av - lambda v| observed.
        :param threshold: Admissible residual.
        """
        self.residual = residual
        self.threshold = threshold

    def __str__(self) -> str:
        return f"Eigenpair residual {self.residual:.3e} exceeds {self.threshold:.3e}."


class SingularCongruenceException(KahlerCompException):
    """
    Exception raised when a congruence is requested with a singular diagonal matrix.
    """

    def __init__(self, diagonal: List[float]):
        """
        Initialization.

        :param diagonal: Diagonal of the congruence matrix.
        """
        self.diagonal = list(diagonal)

    def __str__(self) -> str:
        return f"Congruence matrix diag({self.diagonal}) is not invertible."



class NonDiagonalCongruenceException(KahlerCompException):
    """
    Exception raised when a congruence is requested with a matrix that is not diagonal.
    """

    def __init__(self, off_diagonal_norm: float):
        """
        Initialization.

        :param off_diagonal_norm: Frobenius norm of the off-diagonal part of the congruence matrix.
        """
        self.off_diagonal_norm = off_diagonal_norm

    def __str__(self) -> str:
        return f"Congruence matrix is not diagonal: off-diagonal norm {self.off_diagonal_norm:.3e}."


class ChartDomainException(KahlerCompException):
    """
    Exception raised when a point lies outside the domain of a chart.
    """

    def __init__(self, chart_label: str, point: List[complex]):
        """
        Initialization.

        :param chart_label: Label of the chart.
        :param point: Chart coordinates of the rejected point.
        """
        self.chart_label = chart_label
        self.point = list(point)

    def __str__(self) -> str:
        return f"Point {self.point} is outside the domain of the {self.chart_label} chart."


class NonPositiveMetricException(KahlerCompException):
    """
    Exception raised when a metric evaluates to a non positive definite matrix.
    """

    def __init__(self, chart_label: str, min_eigenvalue: float):
        """
        Initialization.

        :param chart_label: Label of the chart.
        :param min_eigenvalue: Smallest eigenvalue of the evaluated metric.
        """
        self.chart_label = chart_label
        self.min_eigenvalue = min_eigenvalue

    def __str__(self) -> str:
        return (
            f"Metric of the {self.chart_label} chart is not positive definite "
            f"(smallest eigenvalue {self.min_eigenvalue:.3e})."
        )


class NonUnitaryFrameException(KahlerCompException):
    """
    Exception raised when a frame is not unitary with respect to the metric.
    """

    def __init__(self, residual: float, threshold: float):
        """
        Initialization.

        :param residual: Norm of E g E* - I.
        :param threshold: Admissible residual.
        """
        self.residual = residual
        self.threshold = threshold

    def __str__(self) -> str:
        return f"Frame is not unitary: residual {self.residual:.3e} exceeds {self.threshold:.1e}."


class EmptySampleException(KahlerCompException):
    """
    Exception raised when a sampling operation receives no samples.
    """

    def __init__(self, operation: str):
        """
        Initialization.

        :param operation: Name of the operation.
        """
        self.operation = operation

    def __str__(self) -> str:
        return f"No samples provided to {self.operation}."


class DegenerateFrameException(KahlerCompException):
    """
    Exception raised when a frame has (numerically) dependent vectors.
    """

    def __init__(self, index: int, norm: float):
        """
        Initialization.

        :param index: Index of the degenerate frame vector.
        :param norm: Norm left after orthogonalization.
        """
        self.index = index
        self.norm = norm

    def __str__(self) -> str:
        return f"Frame vector {self.index} is degenerate (residual norm {self.norm:.3e})."


class ZeroVectorException(KahlerCompException):
    """
    Exception raised when a homogeneous coordinate vector is zero.
    """

    def __init__(self, name: str):
        """
        Initialization.

        :param name: Name of the argument.
        """
        self.name = name

    def __str__(self) -> str:
        return f"Homogeneous coordinates {self.name} must be nonzero."


class SubspaceDimensionException(KahlerCompException):
    """
    Exception raised when a subspace or submanifold dimension is out of range.
    """

    def __init__(self, dimension: int, ambient_dimension: int):
        """
        Initialization.

        :param dimension: Requested dimension.
        :param ambient_dimension: Complex dimension of the ambient space.
        """
        self.dimension = dimension
        self.ambient_dimension = ambient_dimension

    def __str__(self) -> str:
        return (
            f"Subspace dimension {self.dimension} is not allowed in a space of complex dimension "
            f"{self.ambient_dimension} (expected 0 <= dimension <= {self.ambient_dimension - 1})."
        )


class ShootingConvergenceException(KahlerCompException):
    """
    Exception raised when a boundary value shooting does not converge.
    """

    def __init__(self, best_miss: float, reason: str):
        """
        Initialization.

        :param best_miss: Smallest endpoint miss reached.
        :param reason: Message of the root finder.
        """
        self.best_miss = best_miss
        self.reason = reason

    def __str__(self) -> str:
        return f"Geodesic shooting did not converge (best endpoint miss {self.best_miss:.3e}): {self.reason}"


class RadiusException(KahlerCompException):
    """
    Exception raised when a distance argument is not strictly positive.
    """

    def __init__(self, radius: float):
        """
        Initialization.

        :param radius: Rejected radius.
        """
        self.radius = radius

    def __str__(self) -> str:
        return f"Radius must be strictly positive, got {self.radius}."


class ModelDiameterException(KahlerCompException):
    """
    Exception raised when a radius lies beyond the model diameter sqrt(2K) r < pi.
    """

    def __init__(self, K: float, radius: float):
        """
        Initialization.

        :param K: Curvature bound.
        :param radius: Rejected radius.
        """
        self.K = K
        self.radius = radius

    def __str__(self) -> str:
        return f"Radius {self.radius} is beyond model diameter for K={self.K} (sqrt(2K) r must be below pi)."


class EpsilonException(KahlerCompException):
    """
    Exception raised when the seed offset is not strictly positive.
    """

    def __init__(self, eps: float):
        """
        Initialization.

        :param eps: Rejected offset.
        """
        self.eps = eps

    def __str__(self) -> str:
        return f"Seed offset eps must be strictly positive, got {self.eps}."


class FrameMismatchException(KahlerCompException):
    """
    Exception raised when two matrices to compare are not expressed at the same radius or in the same frame.
    """

    def __init__(self, computed_t: float, bound_t: float, computed_dim: int, bound_dim: int):
        """
        Initialization.

        :param computed_t: Radius of the computed Hessian.
        :param bound_t: Radius of the bound matrices.
        :param computed_dim: Dimension of the computed Hessian.
        :param bound_dim: Dimension of the bound matrices.
        """
        self.computed_t = computed_t
        self.bound_t = bound_t
        self.computed_dim = computed_dim
        self.bound_dim = bound_dim

    def __str__(self) -> str:
        return (
            f"Cannot compare Hessian at t={self.computed_t} (dim {self.computed_dim}) with bound at "
            f"t={self.bound_t} (dim {self.bound_dim})."
        )


class SubmanifoldOrthogonalityException(KahlerCompException):
    """
    Exception raised when a geodesic does not leave the submanifold orthogonally.
    """

    def __init__(self, inner_product: float):
        """
        Initialization.

        :param inner_product: Largest Hermitian product between the velocity and a tangent direction of S.
        """
        self.inner_product = inner_product

    def __str__(self) -> str:
        return f"Geodesic is not orthogonal to the submanifold (inner product {self.inner_product:.3e})."


class UnsupportedDistanceException(KahlerCompException):
    """
    Exception raised when no closed-form distance is available for a chart and submanifold.
    """

    def __init__(self, chart_label: str, submanifold: str):
        """
        Initialization.

        :param chart_label: Label of the chart.
        :param submanifold: Description of the submanifold.
        """
        self.chart_label = chart_label
        self.submanifold = submanifold

    def __str__(self) -> str:
        return f"No closed-form distance to {self.submanifold} on the {self.chart_label} chart."


class EigenvalueBracketException(KahlerCompException):
    """
    Exception raised when no sign change of the shooting residual is found in the eigenvalue bracket.
    """

    def __init__(self, lower: float, upper: float, lower_residual: float, upper_residual: float):
        """
        Initialization.

        :param lower: Lower end of the last bracket tried.
        :param upper: Upper end of the last bracket tried.
        :param lower_residual: Shooting residual at the lower end.
        :param upper_residual: Shooting residual at the upper end.
        """
        self.lower = lower
        self.upper = upper
        self.lower_residual = lower_residual
        self.upper_residual = upper_residual

    def __str__(self) -> str:
        return (
            f"No eigenvalue found in bracket [{self.lower}, {self.upper}] "
            f"(residuals {self.lower_residual:.3e}, {self.upper_residual:.3e})."
        )


class MeshDegeneracyException(KahlerCompException):
    """
    Exception raised when a triangle mesh cannot support a Laplacian.
    """

    def __init__(self, reason: str):
        """
        Initialization.

        :param reason: Description of the defect.
        """
        self.reason = reason

    def __str__(self) -> str:
        return f"Degenerate mesh: {self.reason}."


class QuadratureDivergenceException(KahlerCompException):
    """
    Exception raised when a quadrature produces non-finite values or does not converge.
    """

    def __init__(self, quantity: str, value: Optional[float] = None):
        """
        Initialization.

        :param quantity: Integrated quantity.
        :param value: Last value obtained, if any.
        """
        self.quantity = quantity
        self.value = value

    def __str__(self) -> str:
        return f"Quadrature of {self.quantity} diverged (last value {self.value})."


class ScalarCurvatureRangeException(KahlerCompException):
    """
    Exception raised when a scalar curvature band is empty or not positive.
    """

    def __init__(self, k1: float, k2: float):
        """
        Initialization.

        :param k1: Lower scalar curvature.
        :param k2: Upper scalar curvature.
        """
        self.k1 = k1
        self.k2 = k2

    def __str__(self) -> str:
        return f"Scalar curvature range requires 0 < k1 <= k2, got k1={self.k1}, k2={self.k2}."


class NonIntegrableChartException(KahlerCompException):
    """
    Exception raised when a volume is requested on a chart with infinite volume.
    """

    def __init__(self, chart_label: str):
        """
        Initialization.

        :param chart_label: Label of the chart.
        """
        self.chart_label = chart_label

    def __str__(self) -> str:
        return f"The {self.chart_label} chart does not have finite volume."


class TolerancePolicyException(KahlerCompException):
    """
    Exception raised when a tolerance is not strictly positive.
    """

    def __init__(self, name: str, value: float):
        """
        Initialization.

        :param name: Name of the tolerance.
        :param value: Rejected value.
        """
        self.name = name
        self.value = value

    def __str__(self) -> str:
        return f"Tolerance {self.name} must be strictly positive, got {self.value}."


class BasePointMismatchException(KahlerCompException):
    """
    Exception raised when a tangent vector is not based at the evaluation point.
    """

    def __init__(self, base_point: List[complex], point: List[complex]):
        """
        Initialization.

        :param base_point: Base point of the tangent vector.
        :param point: Evaluation point.
        """
        self.base_point = list(base_point)
        self.point = list(point)

    def __str__(self) -> str:
        return f"Tangent vector based at {self.base_point} cannot be used at {self.point}."


class VelocityNormException(KahlerCompException):
    """
    Exception raised when an initial velocity does not have unit Riemannian norm.
    """

    def __init__(self, norm: float):
        """
        Initialization.

        :param norm: Riemannian norm of the velocity.
        """
        self.norm = norm

    def __str__(self) -> str:
        return f"Initial velocity must have unit norm, got {self.norm:.12f}."


class IntegrationStepException(KahlerCompException):
    """
    Exception raised when an integration step or horizon is not strictly positive.
    """

    def __init__(self, name: str, value: float):
        """
        Initialization.

        :param name: Name of the quantity.
        :param value: Value received.
        """
        self.name = name
        self.value = value

    def __str__(self) -> str:
        return f"Integration {self.name} must be strictly positive, got {self.value}."


class RadialFrameException(KahlerCompException):
    """
    Exception raised when the first vector of a frame is not the complexified velocity of the geodesic.
    """

    def __init__(self, residual: float, threshold: float):
        """
        Initialization.

        :param residual: Largest deviation between e_1 and sqrt(2) times the velocity.
        :param threshold: Admitted deviation.
        """
        self.residual = residual
        self.threshold = threshold

    def __str__(self) -> str:
        return (
            f"First frame vector deviates from the radial direction by {self.residual:.3e} "
            f"(threshold {self.threshold:.1e})."
        )


class ChartLabelException(KahlerCompException):
    """
    Exception raised when a space label does not agree with the curvature constant of a model space.
    """

    def __init__(self, label: str, K: float):
        """
        Initialization.

        :param label: Space label.
        :param K: Curvature constant.
        """
        self.label = label
        self.K = K

    def __str__(self) -> str:
        return f"Space label {self.label} does not describe a model space with K={self.K}."
