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
    HermitianCurve, CurveStatus, ComparisonOutcome, ComparisonResult, RiccatiSuiteSummary
)
from kahlercomp.domain.exceptions import EmptySampleException, DimensionMismatchException


class TestHermitianCurve:

    def test_hermitian_curve(self):
        times = np.linspace(0.1, 1, 10)
        values = np.array([[[t, 1j * t], [-1j * t, 2 * t]] for t in times])
        curve = HermitianCurve(times, values, T=1)
        assert curve.dim == 2
        assert len(curve) == 10
        assert curve.t_end == 1
        assert curve.status == CurveStatus.COMPLETE
        np.testing.assert_allclose(curve(0.55).entries, [[0.55, 0.55j], [-0.55j, 1.1]], atol=1e-12)

        # t X(t) of a curve behaving like C/t is constant
        singular = HermitianCurve(times, np.array([[[1 / t]] for t in times]), T=1, singular_at_zero=True)
        increments = singular.scaled_increments(levels=4)
        assert len(increments) == 3
        assert max(increments) < 1e-12

        with pytest.raises(EmptySampleException) as e:
            HermitianCurve([], np.zeros((0, 1, 1)), T=1)
        assert e.value.operation == "HermitianCurve"
        with pytest.raises(DimensionMismatchException):
            HermitianCurve(times, np.zeros((3, 2, 2)), T=1)


class TestRiccatiSuiteSummary:

    def test_summary(self):
        summary = RiccatiSuiteSummary(
            7,
            [
                ComparisonResult(2, ComparisonOutcome.HYPOTHESIS_VIOLATION, -1.0, 0.5),
                ComparisonResult(0, ComparisonOutcome.HOLDS, 1e-3, 0.1),
                ComparisonResult(1, ComparisonOutcome.VIOLATED, -1e-2, 0.2, truncated=True)
            ]
        )
        assert [result.index for result in summary.results] == [0, 1, 2]
        assert summary.instances == 3
        assert summary.failures == 1
        assert summary.hypothesis_violations == 1
        assert cmath.isclose(summary.worst_margin, -1e-2, abs_tol=1e-15)
        assert summary.results[0].holds
        assert not summary.results[1].holds
        assert RiccatiSuiteSummary(7, []).worst_margin == float("inf")
