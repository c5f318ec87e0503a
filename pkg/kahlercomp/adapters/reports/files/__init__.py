# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .report_writer import FileReportWriter, REPORT_FILE, MESH_FILE  # noqa
