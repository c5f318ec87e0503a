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

from kahlercomp.domain.exceptions import EmptySampleException
from kahlercomp.domain.services.modelspace import bisectional_lower_bound_estimate


class TestBisectionalEstimator:

    def test_fubini_study(self, cp2_chart, sample_points):
        estimate = bisectional_lower_bound_estimate(cp2_chart, sample_points, 500, 11)
        assert cmath.isclose(estimate.min_ratio, 1, abs_tol=1e-6)
        assert estimate.max_imaginary_part < 1e-10
        assert estimate.nb_samples == 20 * (4 + 500)
        assert estimate.nb_samples >= 10 ** 4
        point, x, y = estimate.argmin
        assert point.shape == (2,)
        assert x.shape == y.shape == (2,)

    def test_flat(self, flat_chart, sample_points):
        estimate = bisectional_lower_bound_estimate(flat_chart, sample_points, 100, 11)
        assert cmath.isclose(estimate.min_ratio, 0, abs_tol=1e-8)

    def test_product(self, product_chart, sample_points):
        estimate = bisectional_lower_bound_estimate(product_chart, sample_points, 100, 11)
        assert cmath.isclose(estimate.min_ratio, 0, abs_tol=1e-6)

    def test_hyperbolic(self, hyperbolic_chart):
        points = [np.zeros(2), np.array([0.3, 0.2j]), np.array([-0.1 + 0.4j, 0.2])]
        estimate = bisectional_lower_bound_estimate(hyperbolic_chart, points, 50, 3)
        assert cmath.isclose(estimate.min_ratio, -1, abs_tol=1e-6)

    def test_determinism(self, cp2_chart, sample_points):
        first = bisectional_lower_bound_estimate(cp2_chart, sample_points, 10, 5)
        second = bisectional_lower_bound_estimate(cp2_chart, sample_points, 10, 5)
        assert first.min_ratio == second.min_ratio
        np.testing.assert_array_equal(first.argmin[1], second.argmin[1])

    def test_empty(self, cp2_chart):
        with pytest.raises(EmptySampleException) as e:
            bisectional_lower_bound_estimate(cp2_chart, [], 10, 0)
        assert e.value.operation == "bisectional_lower_bound_estimate"
