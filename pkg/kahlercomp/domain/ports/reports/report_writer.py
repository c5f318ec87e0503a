# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from abc import ABC, abstractmethod
from typing import Dict, List, Optional

from kahlercomp.domain.ports.dtos import VerificationReport, Table, MeshGeometry


class ReportWriter(ABC):
    """
    Abstract class gathering methods to output the reports of a run.
    """

    @abstractmethod
    def write_report(
        self, report: VerificationReport, tables: Dict[str, Table], mesh: Optional[MeshGeometry] = None
    ) -> List[str]:
        """
        Output a run report with its tables.

        :param report: Report of the run.
        :param tables: Plot-ready tables by name.
        :param mesh: Sphere mesh used by the eigenvalue checks, if any.
        :return: Locations of the outputs.
        """
        pass
