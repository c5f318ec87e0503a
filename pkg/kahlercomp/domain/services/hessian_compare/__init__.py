# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .bounds import bound_functions, bound_at, laplacian_of_distance  # noqa
from .riccati_evolution import (  # noqa
    CurvatureInterpolant, riccati_seed, evolve_hessian, estimate_integration_order, DEFAULT_EPS, DEFAULT_STEP
)
from .oracles import radial_frame_at, fd_hessian_oracle, jacobi_oracle  # noqa
from .comparison import (  # noqa
    verdict, oracle_triangle, mixed_derivative, congruence_reduction_check, equality_probe, seed_sensitivity,
    curvature_monotonicity
)
