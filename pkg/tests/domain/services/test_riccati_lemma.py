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

from kahlercomp.domain.exceptions import EpsilonException, IntegrationStepException, DimensionMismatchException
from kahlercomp.domain.models import ComparisonOutcome, CurveStatus, HermitianMatrix
from kahlercomp.domain.services.riccati_lemma import (
    ConstantCurve, singular_seed, generate_instance, integrate_riccati, comparison_check, run_suite,
    scalar_closed_form, scalar_closed_form_check
)


class TestRiccatiLemma:

    def test_suite(self):
        summary = run_suite(20, 42)
        assert summary.instances == 20
        assert summary.failures == 0
        assert summary.hypothesis_violations == 0
        assert summary.worst_margin >= -1e-9

    def test_suite_is_reproducible(self):
        first = run_suite(3, 7, T=0.5)
        second = run_suite(3, 7, T=0.5)
        assert [result.worst_margin for result in first.results] == [result.worst_margin for result in second.results]

    def test_reversed_hypothesis(self):
        instance = generate_instance(42, 0, n=2, reversed_hypothesis=True)
        result = comparison_check(instance)
        assert result.outcome == ComparisonOutcome.HYPOTHESIS_VIOLATION
        assert result.worst_margin < 0
        assert not result.holds

    def test_scalar_closed_form(self):
        assert scalar_closed_form(0, 2.0) == 0.5
        assert cmath.isclose(scalar_closed_form(1.0, 1.0), 1 / np.tanh(1.0), abs_tol=1e-15)
        assert cmath.isclose(scalar_closed_form(-1.0, 1.0), 1 / np.tan(1.0), abs_tol=1e-15)
        for R in (1.0, 0.0, -1.0, 4.0):
            assert scalar_closed_form_check(R) < 1e-7
        with pytest.raises(IntegrationStepException) as e:
            scalar_closed_form_check(-4.0, T=2.0)
        assert e.value.value == 2.0

    def test_instances(self):
        instance = generate_instance(3, 5, n=3)
        assert instance.n == 3
        assert instance.singular_seed
        for t in (0.0, 0.3, 1.0):
            gap = instance.R_B(t) - instance.R_A(t)
            assert np.linalg.eigvalsh((gap + gap.conj().T) / 2)[0] >= -1e-12
        again = generate_instance(3, 5, n=3)
        np.testing.assert_array_equal(instance.seed.entries, again.seed.entries)
        with pytest.raises(DimensionMismatchException) as e:
            generate_instance(3, 5, n=5)
        assert e.value.actual == (5,)

    def test_singular_seed(self):
        seed = singular_seed(np.random.default_rng(0), 3, 1e-3)
        eigenvalues = np.linalg.eigvalsh(seed.entries)
        assert eigenvalues[-1] >= 1e3
        assert eigenvalues[0] >= -1e-9

    def test_integrate_riccati(self):
        curve = integrate_riccati(ConstantCurve([[0.0]]), HermitianMatrix([[1.0]]), 1.0, 2.0, 1e-2)
        assert curve.status == CurveStatus.COMPLETE
        np.testing.assert_allclose(np.real(curve.values[:, 0, 0]), 1 / curve.times, rtol=1e-9)

        curve = integrate_riccati(ConstantCurve([[0.0]]), HermitianMatrix([[-1.0]]), 1.0, 3.0, 1e-2)
        assert curve.status == CurveStatus.BLOW_UP

        with pytest.raises(EpsilonException):
            integrate_riccati(ConstantCurve([[0.0]]), HermitianMatrix([[1.0]]), 0, 1.0, 1e-2)
        with pytest.raises(IntegrationStepException):
            integrate_riccati(ConstantCurve([[0.0]]), HermitianMatrix([[1.0]]), 1.0, 2.0, 0)
        with pytest.raises(IntegrationStepException):
            integrate_riccati(ConstantCurve([[0.0]]), HermitianMatrix([[1.0]]), 1.0, 0.5, 1e-2)
