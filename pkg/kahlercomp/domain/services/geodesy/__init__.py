# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .frames import metric_gram_schmidt, adapted_initial_frame  # noqa
from .geodesic_integrator import (  # noqa
    integrate_geodesic, parallel_transport_frame, parallelism_residual, normal_geodesic
)
from .distances import (  # noqa
    SubspaceDistances, homogeneous_coordinates, distance_fs, distance_to_subspace, closed_form_distance, footpoint
)
from .shooting import shoot_geodesic, distance_oracle, subspace_separation_oracle  # noqa
