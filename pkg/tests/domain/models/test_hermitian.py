# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import cmath

import numpy as np
import pytest

from kahlercomp.domain.models import (
    TolerancePolicy, HermitianMatrix, SymmetricComplexMatrix, hermitian_eigenvalues, loewner_leq, congruence
)
from kahlercomp.domain.exceptions import (
    TolerancePolicyException, HermitianAsymmetryException, SymmetryException, DimensionMismatchException,
    NonFiniteValueException, SingularCongruenceException, NonDiagonalCongruenceException
)


class TestTolerancePolicy:

    def test_tolerance_policy(self, tolerance_policy):
        assert tolerance_policy.to_dict() == {"abs_tol": 1e-6, "rel_tol": 1e-6, "psd_slack": 1e-5}
        assert tolerance_policy.is_close(1 + 5e-7, 1)
        assert tolerance_policy.is_close(1e6 + 0.5, 1e6)
        assert not tolerance_policy.is_close(1 + 5e-6, 1)

        # Slack depending on the step
        policy = TolerancePolicy.for_step(1e-3)
        assert cmath.isclose(policy.psd_slack, 2e-5, abs_tol=1e-15)

        with pytest.raises(TolerancePolicyException) as e:
            TolerancePolicy(psd_slack=0)
        assert e.value.name == "psd_slack"
        assert e.value.value == 0
        with pytest.raises(TolerancePolicyException) as e:
            TolerancePolicy(abs_tol=float("nan"))
        assert e.value.name == "abs_tol"


class TestHermitianMatrix:

    def test_construction(self):
        matrix = HermitianMatrix([[2, 1j], [-1j, 3]])
        assert matrix.dim == 2
        np.testing.assert_array_equal(matrix.real_diagonal(), [2, 3])
        assert matrix.trace() == 5
        with pytest.raises(ValueError):
            # Entries are read-only
            matrix.entries[0, 0] = 1

        # Asymmetry below the threshold is symmetrized away
        matrix = HermitianMatrix([[1, 1e-12], [0, 1]])
        assert matrix.entries[0, 1] == matrix.entries[1, 0]

        with pytest.raises(HermitianAsymmetryException) as e:
            HermitianMatrix([[1, 1], [0, 1]])
        assert cmath.isclose(e.value.relative_asymmetry, np.sqrt(2 / 3), abs_tol=1e-12)
        assert e.value.threshold == 1e-10
        with pytest.raises(DimensionMismatchException) as e:
            HermitianMatrix([[1, 2, 3], [2, 1, 3]])
        assert e.value.actual == (2, 3)
        with pytest.raises(DimensionMismatchException):
            HermitianMatrix([])
        with pytest.raises(NonFiniteValueException) as e:
            HermitianMatrix([[np.nan, 0], [0, 1]])
        assert e.value.quantity == "Hermitian matrix entries"

    def test_operations(self):
        first = HermitianMatrix.diagonal([1, 2])
        second = HermitianMatrix.identity(2)
        assert first + second == HermitianMatrix.diagonal([2, 3])
        assert first - second == HermitianMatrix.diagonal([0, 1])
        assert -first == HermitianMatrix.diagonal([-1, -2])
        assert 2 * first == HermitianMatrix.diagonal([2, 4])
        assert first * 0 == HermitianMatrix.zeros(2)
        assert cmath.isclose(first.norm(), 2, abs_tol=1e-14)
        with pytest.raises(DimensionMismatchException):
            first + HermitianMatrix.identity(3)


class TestSymmetricComplexMatrix:

    def test_construction(self):
        matrix = SymmetricComplexMatrix([[1j, 2], [2, 0]])
        assert matrix.dim == 2
        assert matrix == SymmetricComplexMatrix([[1j, 2], [2, 0]])
        assert SymmetricComplexMatrix.zeros(2) == SymmetricComplexMatrix.diagonal([0, 0])
        with pytest.raises(SymmetryException) as e:
            SymmetricComplexMatrix([[0, 1j], [-1j, 0]])
        assert cmath.isclose(e.value.relative_asymmetry, 2, abs_tol=1e-12)


class TestHermitianCore:

    def test_hermitian_eigenvalues(self):
        eigenvalues = hermitian_eigenvalues(HermitianMatrix([[2, 1j], [-1j, 2]]))
        np.testing.assert_allclose(eigenvalues, [1, 3], atol=1e-14)

    def test_loewner_leq(self, tolerance_policy):
        verdict = loewner_leq(HermitianMatrix.diagonal([1, 2]), HermitianMatrix.diagonal([2, 2]), tolerance_policy)
        assert verdict.holds
        assert cmath.isclose(verdict.min_eigenvalue_of_gap, 0, abs_tol=1e-14)
        assert cmath.isclose(verdict.max_eigenvalue_of_gap, 1, abs_tol=1e-14)

        verdict = loewner_leq(HermitianMatrix.diagonal([1, 2]), HermitianMatrix.diagonal([0, 3]), tolerance_policy)
        assert not verdict.holds
        assert cmath.isclose(verdict.min_eigenvalue_of_gap, -1, abs_tol=1e-14)

        # Negative eigenvalue within the slack
        verdict = loewner_leq(
            HermitianMatrix.identity(2), HermitianMatrix.identity(2) * (1 - 1e-6), tolerance_policy
        )
        assert verdict.holds

        # Adding a positive semi definite matrix keeps the order
        rng = np.random.default_rng(3)
        for _ in range(20):
            base = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            shift = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
            lower = HermitianMatrix(base + base.conj().T)
            upper = HermitianMatrix(lower.entries + shift @ shift.conj().T)
            assert loewner_leq(lower, upper, tolerance_policy).holds

        with pytest.raises(DimensionMismatchException):
            loewner_leq(HermitianMatrix.identity(2), HermitianMatrix.identity(3), tolerance_policy)

    def test_congruence(self):
        assert congruence([2, 1], HermitianMatrix.identity(2)) == HermitianMatrix.diagonal([4, 1])
        transformed = congruence(np.diag([np.sqrt(2), 1]), HermitianMatrix([[1, 1j], [-1j, 1]]))
        np.testing.assert_allclose(transformed.entries, [[2, np.sqrt(2) * 1j], [-np.sqrt(2) * 1j, 1]], atol=1e-14)

        with pytest.raises(SingularCongruenceException) as e:
            congruence([0, 1], HermitianMatrix.identity(2))
        assert e.value.diagonal == [0.0, 1.0]
        with pytest.raises(DimensionMismatchException):
            congruence([1, 1, 1], HermitianMatrix.identity(2))
        with pytest.raises(NonDiagonalCongruenceException) as e:
            congruence(np.array([[1.0, 0.5], [0.0, 1.0]]), HermitianMatrix.identity(2))
        assert cmath.isclose(e.value.off_diagonal_norm, 0.5)
