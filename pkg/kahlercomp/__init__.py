# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

# Determine version number if it exits (i.e. if package is installed)
try:
    from kahlercomp import _version
    __version__ = _version.version
except ImportError:
    # package is not installed
    pass
