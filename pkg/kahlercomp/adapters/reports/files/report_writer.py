# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import csv
import json
import logging
import math
import os
import shutil
from typing import Dict, List, Optional

from kahlercomp.domain.ports.dtos import VerificationReport, Table, MeshGeometry
from kahlercomp.domain.ports.reports import ReportWriter
from .exceptions import OutputDirectoryException

logger = logging.getLogger(__name__)

REPORT_FILE = "kahlercomp_report.json"
MESH_FILE = "cp1_mesh.off"
SIGNIFICANT_DIGITS = 12


def format_number(value: float) -> str:
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def rounded(data):
    """
    Round every float of a JSON-like structure to SIGNIFICANT_DIGITS significant digits. Non finite values become None.
    """
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, float):
        return float(format_number(data)) if math.isfinite(data) else None
    if isinstance(data, dict):
        return {key: rounded(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [rounded(value) for value in data]
    return data


class FileReportWriter(ReportWriter):
    """
    Write the reports of a run in an output directory: the JSON report, one CSV file per table and the mesh in the OFF
    format.
    """

    def __init__(self, output_dir: str, rewrite: bool = False):
        """
        Initialize the writer.

        :param output_dir: Output directory.
        :param rewrite: If True, a non empty output directory is emptied, otherwise it is refused.
        """
        self.output_dir = output_dir
        self.rewrite = rewrite

    def prepare(self):
        """
        Create the output directory, or empty it if allowed.

        :raise OutputDirectoryException if the directory is a file, or is not empty and cannot be rewritten.
        """
        if os.path.isdir(self.output_dir):
            if len(os.listdir(self.output_dir)) > 0:
                if not self.rewrite:
                    raise OutputDirectoryException(self.output_dir, "directory not empty, use --rewrite")
                # Delete directory and create a new one
                shutil.rmtree(self.output_dir, ignore_errors=True)
                os.makedirs(self.output_dir)
        elif os.path.exists(self.output_dir):
            raise OutputDirectoryException(self.output_dir, "not a directory")
        else:
            os.makedirs(self.output_dir)

    def write_report(
        self, report: VerificationReport, tables: Dict[str, Table], mesh: Optional[MeshGeometry] = None
    ) -> List[str]:
        """
        Output a run report with its tables. Keys are sorted and numbers rounded so that identical runs produce
        identical files.

        :param report: Report of the run.
        :param tables: Plot-ready tables by file name.
        :param mesh: Sphere mesh used by the eigenvalue checks, if any.
        :return: Paths of the written files.
        """
        os.makedirs(self.output_dir, exist_ok=True)
        paths = [os.path.join(self.output_dir, REPORT_FILE)]
        with open(paths[0], "w") as report_file:
            json.dump(rounded(report.dict()), report_file, indent=2, sort_keys=True)
            report_file.write("\n")

        for name in sorted(tables):
            path = os.path.join(self.output_dir, name)
            self.write_table(path, tables[name])
            paths.append(path)

        if mesh is not None:
            path = os.path.join(self.output_dir, MESH_FILE)
            self.write_mesh(path, mesh)
            paths.append(path)
        logger.info(f"Reports written in {self.output_dir}: {', '.join(os.path.basename(path) for path in paths)}")
        return paths

    @staticmethod
    def write_table(path: str, table: Table):
        with open(path, "w", newline="") as table_file:
            writer = csv.writer(table_file)
            writer.writerow(table.columns)
            for row in table.rows:
                writer.writerow([format_number(value) for value in row])

    @staticmethod
    def write_mesh(path: str, mesh: MeshGeometry):
        """
        Save a triangle mesh in the OFF format.
        """
        with open(path, "w") as mesh_file:
            mesh_file.write("OFF\n")
            mesh_file.write(f"{len(mesh.vertices)} {len(mesh.faces)} 0\n")
            for vertex in mesh.vertices:
                mesh_file.write(" ".join(format_number(coordinate) for coordinate in vertex) + "\n")
            for face in mesh.faces:
                mesh_file.write("3 " + " ".join(str(index) for index in face) + "\n")
