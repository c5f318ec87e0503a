# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import numpy as np
import pytest

from kahlercomp.domain.models import SubmanifoldSpec, TolerancePolicy
from kahlercomp.domain.models.kahler_chart import SpaceFormChart, ProductChart
from kahlercomp.domain.services.geodesy import normal_geodesic


@pytest.fixture
def cp1_chart() -> SpaceFormChart:
    return SpaceFormChart(1, 1.0)


@pytest.fixture
def cp2_chart() -> SpaceFormChart:
    return SpaceFormChart(2, 1.0)


@pytest.fixture
def flat_chart() -> SpaceFormChart:
    return SpaceFormChart(2, 0.0)


@pytest.fixture
def hyperbolic_chart() -> SpaceFormChart:
    return SpaceFormChart(2, -1.0)


@pytest.fixture
def product_chart() -> ProductChart:
    return ProductChart([SpaceFormChart(1, 1.0), SpaceFormChart(1, 1.0)])


@pytest.fixture
def point_spec() -> SubmanifoldSpec:
    return SubmanifoldSpec.point()


@pytest.fixture
def line_spec() -> SubmanifoldSpec:
    return SubmanifoldSpec.linear([1])


@pytest.fixture
def tolerance_policy() -> TolerancePolicy:
    return TolerancePolicy()


@pytest.fixture
def cp2_point_frame(cp2_chart, point_spec):
    _, frame = normal_geodesic(cp2_chart, point_spec, 2.0, 1e-3)
    return frame


@pytest.fixture
def sample_points():
    rng = np.random.default_rng(7)
    return [0.4 * (rng.standard_normal(2) + 1j * rng.standard_normal(2)) for _ in range(20)]
