# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .quadrature import compact_factors, volume_quadrature, flat_polydisk_volume  # noqa
from .chern import scalar_curvature_samples, scalar_curvature_range, chern_factor, chern_number  # noqa
from .comparison import (  # noqa
    PINNED_BASE_VOLUMES, volume_formula, base_volume, constant_scalar_volume, scaling_law_check, comparison_verdict,
    negative_case_band, volume_band_table, volume_report
)
