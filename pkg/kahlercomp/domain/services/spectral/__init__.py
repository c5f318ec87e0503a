# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .radial_shooting import radial_profile, critical_radius, radial_dirichlet_lambda1  # noqa
from .sphere_mesh import icosphere, check_mesh, cotangent_laplacian, mesh_lambda1_cp1  # noqa
from .bochner import (  # noqa
    CP1Function, EIGENFUNCTION_LIBRARY, sphere_coordinates, bochner_identity_check, equality_case_checks
)
