# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from abc import ABC, abstractmethod

from kahlercomp.domain.ports.dtos import RunConfiguration


class RunConfigParser(ABC):
    """
    Abstract class gathering methods to read a run configuration from an input.
    """

    @abstractmethod
    def parse_run_configuration(self) -> RunConfiguration:
        """
        Parse a run configuration input to retrieve its content.

        :return: An object representing the parsed run configuration.
        """
        pass
