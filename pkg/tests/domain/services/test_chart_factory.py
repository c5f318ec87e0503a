# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import pytest

from kahlercomp.domain.exceptions import ChartLabelException, DimensionMismatchException
from kahlercomp.domain.models.kahler_chart import SpaceLabel, SpaceFormChart, ProductChart
from kahlercomp.domain.services.factories import ChartFactory


class TestChartFactory:

    def test_get_chart(self):
        chart = ChartFactory.get_chart(SpaceLabel.FUBINI_STUDY, 2, 1.0)
        assert isinstance(chart, SpaceFormChart)
        assert chart.complex_dim == 2
        assert chart.K == 1
        assert chart.name == "fubini_study(n=2,K=1)"

        chart = ChartFactory.get_chart(SpaceLabel.COMPLEX_HYPERBOLIC, 2, -1.0)
        assert chart.name == "complex_hyperbolic(n=2,K=-1)"

        chart = ChartFactory.get_chart(SpaceLabel.FLAT, 3)
        assert chart.K == 0
        assert chart.complex_dim == 3

        chart = ChartFactory.get_chart(SpaceLabel.PRODUCT, 3, factors=[(1, 1.0), (2, -1.0)])
        assert isinstance(chart, ProductChart)
        assert chart.complex_dim == 3
        assert [factor.complex_dim for factor in chart.factors] == [1, 2]

    def test_label_mismatch(self):
        with pytest.raises(ChartLabelException) as e:
            ChartFactory.get_chart(SpaceLabel.FUBINI_STUDY, 2, -1.0)
        assert e.value.label == "fubini_study"
        assert e.value.K == -1

        with pytest.raises(ChartLabelException):
            ChartFactory.get_chart(SpaceLabel.FLAT, 2, 1.0)
        with pytest.raises(ChartLabelException):
            ChartFactory.get_chart(SpaceLabel.POTENTIAL, 2, 1.0)

    def test_product_dimension(self):
        with pytest.raises(DimensionMismatchException) as e:
            ChartFactory.get_chart(SpaceLabel.PRODUCT, 3, factors=[(1, 1.0), (1, 1.0)])
        assert e.value.expected == (3,)
        assert e.value.actual == (2,)

        with pytest.raises(DimensionMismatchException):
            ChartFactory.get_chart(SpaceLabel.PRODUCT, 2)
