# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .chart import (  # noqa
    KahlerChart, SpaceLabel, TangentVector10, CurvatureSlice, FRAME_UNITARITY_TOLERANCE
)
from .space_form import SpaceFormChart, space_form_label  # noqa
from .product import ProductChart  # noqa
from .potential import PotentialChart, perturbed_space_form_potential  # noqa
