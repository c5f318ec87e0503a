# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .run_config import (  # noqa
    Command, ChartLabel, SubmanifoldKind, OracleType, EigenMode, ChartConfiguration, SubmanifoldConfiguration,
    ToleranceConfiguration, HessianConfiguration, RiccatiConfiguration, EigenConfiguration, VolumeConfiguration,
    RunConfiguration
)
from .reports import (  # noqa
    SCHEMA_VERSION, VerdictRecord, EqualityRecord, HessianSection, ScalarCheckRecord, RiccatiSection, RadialRecord,
    MeshRecord, BochnerRecord, EqualityCaseRecord, EigenSection, VolumeSection, VerificationReport, Table,
    MeshGeometry
)
