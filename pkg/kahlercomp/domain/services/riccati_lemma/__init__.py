# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .integrator import integrate_riccati  # noqa
from .instances import (  # noqa
    ConstantCurve, RotatingSpectrumCurve, PositiveShiftCurve, singular_seed, generate_instance
)
from .harness import comparison_check, run_suite, scalar_closed_form, scalar_closed_form_check  # noqa
