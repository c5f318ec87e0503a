# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import List, Tuple

from kahlercomp.domain.exceptions import DimensionMismatchException, ChartLabelException
from kahlercomp.domain.models.kahler_chart import (
    KahlerChart, SpaceLabel, SpaceFormChart, ProductChart, space_form_label
)


class ChartFactory:
    """
    Service able to build the charts of the model spaces.
    """

    @staticmethod
    def get_chart(
        label: SpaceLabel, complex_dim: int, K: float = 0.0, factors: List[Tuple[int, float]] = None
    ) -> KahlerChart:
        """
        Get the chart of a model space.

        :param label: Space identifier.
        :param complex_dim: Complex dimension of the space. For products, it must equal the sum of the factor
                            dimensions.
        :param K: Curvature constant of a space form. Its sign must agree with the label.
        :param factors: Pairs (complex dimension, K) of the factors of a product.
        :return: The chart.
        :raise ChartLabelException if the label does not name a model space or does not match K.
        :raise DimensionMismatchException if the product factors do not add up to the complex dimension.
        """
        if label == SpaceLabel.PRODUCT:
            charts = [SpaceFormChart(dim, factor_K) for dim, factor_K in (factors or [])]
            total = sum(chart.complex_dim for chart in charts)
            if len(charts) == 0 or total != complex_dim:
                raise DimensionMismatchException((complex_dim,), (total,))
            return ProductChart(charts)
        if label == SpaceLabel.POTENTIAL or space_form_label(K) != label:
            raise ChartLabelException(label.value, K)
        return SpaceFormChart(complex_dim, K)
