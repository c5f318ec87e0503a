# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from kahlercomp.domain.exceptions import KahlerCompException


class OutputDirectoryException(KahlerCompException):
    """
    Exception raised when the output directory cannot receive the reports.
    """

    def __init__(self, output_dir: str, reason: str):
        """
        Initialization.

        :param output_dir: Output directory.
        :param reason: Why it cannot be used.
        """
        self.output_dir = output_dir
        self.reason = reason

    def __str__(self) -> str:
        return f"Output directory {self.output_dir} cannot be used: {self.reason}"
