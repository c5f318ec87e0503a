# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import pytest

from kahlercomp.domain.models import TolerancePolicy
from kahlercomp.domain.models.kahler_chart import SpaceFormChart, ProductChart


@pytest.fixture
def fubini_study_chart() -> SpaceFormChart:
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
def tolerance_policy() -> TolerancePolicy:
    return TolerancePolicy()
