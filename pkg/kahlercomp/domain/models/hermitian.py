# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import re
from typing import Sequence, Union

import numpy as np
from scipy import linalg

from kahlercomp.domain.exceptions import (
    DimensionMismatchException, NonFiniteValueException, HermitianAsymmetryException, SymmetryException,
    EigenvalueConvergenceException, EigenvalueResidualException, SingularCongruenceException,
    NonDiagonalCongruenceException, TolerancePolicyException
)

# Relative asymmetry above which a matrix is rejected instead of symmetrized
RAW_ASYMMETRY_THRESHOLD = 1e-10
# Relative residual admitted for each eigenpair
EIGENPAIR_RESIDUAL_FACTOR = 1e-10


def _as_square_array(entries, quantity: str) -> np.ndarray:
    """
    Convert entries into a finite square complex array.

    :param entries: Matrix entries.
    :param quantity: Name of the quantity, used in error messages.
    :return: The complex array.
    :raise DimensionMismatchException if the entries do not form a square matrix.
    :raise NonFiniteValueException if some entries are NaN or infinite.
    """
    array = np.array(entries, dtype=complex)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
        size = array.shape[0] if array.ndim > 0 else 0
        raise DimensionMismatchException((size, size), array.shape)
    if not np.all(np.isfinite(array)):
        raise NonFiniteValueException(quantity)
    return array


def _relative_gap(array: np.ndarray, reference: np.ndarray) -> float:
    scale = np.linalg.norm(array)
    if scale == 0:
        return 0.0
    return float(np.linalg.norm(array - reference) / scale)


class TolerancePolicy:
    """
    Tolerances shared by every comparison of the toolkit.
    """

    def __init__(self, abs_tol: float = 1e-6, rel_tol: float = 1e-6, psd_slack: float = 1e-5):
        """
        Initialize the policy.

        :param abs_tol: Absolute tolerance on scalar comparisons.
        :param rel_tol: Relative tolerance on scalar comparisons.
        :param psd_slack: Magnitude of negative eigenvalue admitted in Loewner checks.
        :raise TolerancePolicyException if one of the tolerances is not strictly positive.
        """
        for name, value in (("abs_tol", abs_tol), ("rel_tol", rel_tol), ("psd_slack", psd_slack)):
            if not np.isfinite(value) or value <= 0:
                raise TolerancePolicyException(name, value)
        self.abs_tol = float(abs_tol)
        self.rel_tol = float(rel_tol)
        self.psd_slack = float(psd_slack)

    @classmethod
    def for_step(cls, step: float, abs_tol: float = 1e-6, rel_tol: float = 1e-6) -> "TolerancePolicy":
        """
        Build the policy used for Hessian verdicts, where the slack depends on the integration step.

        :param step: Integration step.
        :param abs_tol: Absolute tolerance.
        :param rel_tol: Relative tolerance.
        :return: The tolerance policy with psd_slack = 1e-5 + 10 step^2.
        """
        return cls(abs_tol=abs_tol, rel_tol=rel_tol, psd_slack=1e-5 + 10 * step ** 2)

    def is_close(self, value: float, expected: float) -> bool:
        """
        Compare two scalars with the absolute and relative tolerances.
        """
        return abs(value - expected) <= max(self.abs_tol, self.rel_tol * abs(expected))

    def to_dict(self) -> dict:
        return {"abs_tol": self.abs_tol, "rel_tol": self.rel_tol, "psd_slack": self.psd_slack}

    def __repr__(self):
        return f"TolerancePolicy(abs_tol={self.abs_tol}, rel_tol={self.rel_tol}, psd_slack={self.psd_slack})"


class HermitianMatrix:
    """
    Immutable complex Hermitian matrix.
    Entries are symmetrized at construction, after rejecting raw asymmetry above a relative threshold.
    """

    def __init__(self, entries, max_asymmetry: float = RAW_ASYMMETRY_THRESHOLD):
        """
        Initialize the matrix.

        :param entries: Square array-like of complex entries.
        :param max_asymmetry: Largest relative asymmetry |M - M*| / |M| admitted before symmetrization.
        :raise HermitianAsymmetryException if the raw entries are too far from Hermitian.
        """
        array = _as_square_array(entries, "Hermitian matrix entries")
        asymmetry = _relative_gap(array, array.conj().T)
        if asymmetry > max_asymmetry:
            raise HermitianAsymmetryException(asymmetry, max_asymmetry)
        self._entries = (array + array.conj().T) / 2
        self._entries.setflags(write=False)

    @classmethod
    def identity(cls, dim: int) -> "HermitianMatrix":
        return cls(np.eye(dim))

    @classmethod
    def zeros(cls, dim: int) -> "HermitianMatrix":
        return cls(np.zeros((dim, dim)))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "HermitianMatrix":
        """
        Build a real diagonal matrix.

        :param values: Diagonal values.
        :return: The diagonal Hermitian matrix.
        """
        return cls(np.diag(np.asarray(values, dtype=float)))

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """
        Read-only view of the entries.
        """
        return self._entries

    def real_diagonal(self) -> np.ndarray:
        return np.real(np.diag(self._entries)).copy()

    def trace(self) -> float:
        return float(np.real(np.trace(self._entries)))

    def norm(self) -> float:
        """
        Spectral norm.
        """
        return float(np.linalg.norm(self._entries, 2))

    def _check_same_dim(self, other: "HermitianMatrix"):
        if other.dim != self.dim:
            raise DimensionMismatchException((self.dim, self.dim), (other.dim, other.dim))

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._check_same_dim(other)
        return HermitianMatrix(self._entries + other.entries)

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        self._check_same_dim(other)
        return HermitianMatrix(self._entries - other.entries)

    def __neg__(self) -> "HermitianMatrix":
        return HermitianMatrix(-self._entries)

    def __mul__(self, factor: float) -> "HermitianMatrix":
        return HermitianMatrix(float(factor) * self._entries)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianMatrix):
            return False
        return self.dim == other.dim and np.array_equal(self._entries, other.entries)

    def __repr__(self):
        return f"HermitianMatrix({np.array2string(self._entries, precision=6)})"


class SymmetricComplexMatrix:
    """
    Immutable complex matrix equal to its (unconjugated) transpose.
    """

    def __init__(self, entries, max_asymmetry: float = RAW_ASYMMETRY_THRESHOLD):
        """
        Initialize the matrix.

        :param entries: Square array-like of complex entries.
        :param max_asymmetry: Largest relative asymmetry |M - M^T| / |M| admitted before symmetrization.
        :raise SymmetryException if the raw entries are too far from symmetric.
        """
        array = _as_square_array(entries, "symmetric matrix entries")
        asymmetry = _relative_gap(array, array.T)
        if asymmetry > max_asymmetry:
            raise SymmetryException(asymmetry, max_asymmetry)
        self._entries = (array + array.T) / 2
        self._entries.setflags(write=False)

    @classmethod
    def zeros(cls, dim: int) -> "SymmetricComplexMatrix":
        return cls(np.zeros((dim, dim)))

    @classmethod
    def diagonal(cls, values: Sequence[complex]) -> "SymmetricComplexMatrix":
        return cls(np.diag(np.asarray(values, dtype=complex)))

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    def norm(self) -> float:
        return float(np.linalg.norm(self._entries, 2))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymmetricComplexMatrix):
            return False
        return self.dim == other.dim and np.array_equal(self._entries, other.entries)

    def __repr__(self):
        return f"SymmetricComplexMatrix({np.array2string(self._entries, precision=6)})"


class LoewnerVerdict:
    """
    Outcome of a Loewner comparison A <= B, with the extreme eigenvalues of B - A as witnesses.
    """

    def __init__(self, holds: bool, min_eigenvalue_of_gap: float, max_eigenvalue_of_gap: float):
        self.holds = holds
        self.min_eigenvalue_of_gap = min_eigenvalue_of_gap
        self.max_eigenvalue_of_gap = max_eigenvalue_of_gap

    def __repr__(self):
        return (
            f"LoewnerVerdict(holds={self.holds}, min_eigenvalue_of_gap={self.min_eigenvalue_of_gap:.3e}, "
            f"max_eigenvalue_of_gap={self.max_eigenvalue_of_gap:.3e})"
        )


def hermitian_eigenvalues(matrix: HermitianMatrix) -> np.ndarray:
    """
    Compute the eigenvalues of a Hermitian matrix in ascending order.

    :param matrix: The Hermitian matrix.
    :return: Array of real eigenvalues, sorted in ascending order.
    :raise EigenvalueConvergenceException if LAPACK does not converge.
    :raise EigenvalueResidualException if an eigenpair residual exceeds 1e-10 |A|.
    """
    entries = matrix.entries
    try:
        values, vectors = linalg.eigh(entries)
    except linalg.LinAlgError as e:
        found = re.findall(r"\d+", str(e))
        iterations = int(found[0]) if found else -1
        raise EigenvalueConvergenceException(iterations, str(e))
    threshold = EIGENPAIR_RESIDUAL_FACTOR * np.linalg.norm(entries, 2)
    residual = np.linalg.norm(entries @ vectors - vectors * values, axis=0).max()
    if residual > threshold:
        raise EigenvalueResidualException(float(residual), float(threshold))
    return values


def loewner_leq(a: HermitianMatrix, b: HermitianMatrix, tolerance: TolerancePolicy) -> LoewnerVerdict:
    """
    Check A <= B in the Loewner order, i.e. that B - A is positive semi definite up to psd_slack.

    :param a: Smaller candidate.
    :param b: Larger candidate.
    :param tolerance: Tolerance policy providing the admissible negative eigenvalue.
    :return: The verdict with the extreme eigenvalues of B - A.
    :raise DimensionMismatchException if the matrices have different dimensions.
    """
    if a.dim != b.dim:
        raise DimensionMismatchException((a.dim, a.dim), (b.dim, b.dim))
    eigenvalues = hermitian_eigenvalues(HermitianMatrix(b.entries - a.entries))
    minimum = float(eigenvalues[0])
    return LoewnerVerdict(
        holds=minimum >= -tolerance.psd_slack,
        min_eigenvalue_of_gap=minimum,
        max_eigenvalue_of_gap=float(eigenvalues[-1])
    )


def congruence(d: Union[Sequence[float], np.ndarray], b: HermitianMatrix) -> HermitianMatrix:
    """
    Compute the congruence D B D for a real invertible diagonal matrix D.

    :param d: Diagonal of D, or D itself as a diagonal 2D array.
    :param b: Hermitian matrix to transform.
    :return: The Hermitian matrix D B D.
    :raise SingularCongruenceException if D has a zero on its diagonal.
    :raise NonDiagonalCongruenceException if D is given as a 2D array with nonzero off-diagonal entries.
    :raise DimensionMismatchException if D and B do not have the same dimension.
    """
    diagonal = np.asarray(d, dtype=float)
    if diagonal.ndim == 2:
        off_diagonal = diagonal - np.diag(np.diag(diagonal))
        if np.count_nonzero(off_diagonal) > 0:
            raise NonDiagonalCongruenceException(float(np.linalg.norm(off_diagonal)))
        diagonal = np.diag(diagonal)
    if diagonal.shape != (b.dim,):
        raise DimensionMismatchException((b.dim,), diagonal.shape)
    if np.any(diagonal == 0) or not np.all(np.isfinite(diagonal)):
        raise SingularCongruenceException(diagonal.tolist())
    return HermitianMatrix(diagonal[:, None] * b.entries * diagonal[None, :])
