# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import json
import os

import pytest

from kahlercomp.domain.ports.dtos import VerificationReport, Table, MeshGeometry
from kahlercomp.adapters.reports.files import FileReportWriter, REPORT_FILE, MESH_FILE
from kahlercomp.adapters.reports.files.exceptions import OutputDirectoryException
from kahlercomp.adapters.reports.files.report_writer import rounded, format_number


@pytest.fixture
def report() -> VerificationReport:
    return VerificationReport(
        convention_ledger_hash="0123abcd",
        config={"command": "volume", "K": 1 / 3, "values": (1.0, float("inf"))},
        failures=["volume: upper bound violated"]
    )


@pytest.fixture
def tables() -> dict:
    return {
        "volume_scaling.csv": Table(columns=["lambda", "V"], rows=[[1.0, 4 * 3.141592653589793], [2.0, 2 / 3]]),
        "hessian_cp2_point.csv": Table(columns=["r", "gap"], rows=[[0.1, 0.0]])
    }


class TestFileReportWriter:

    def test_prepare(self, tmp_path):
        output_dir = str(tmp_path / "out")
        writer = FileReportWriter(output_dir)
        writer.prepare()
        assert os.path.isdir(output_dir)

        # Empty directory is accepted
        writer.prepare()

        with open(os.path.join(output_dir, "old.csv"), "w") as old_file:
            old_file.write("0\n")
        with pytest.raises(OutputDirectoryException) as e:
            writer.prepare()
        assert e.value.output_dir == output_dir
        assert e.value.reason == "directory not empty, use --rewrite"

        FileReportWriter(output_dir, rewrite=True).prepare()
        assert os.listdir(output_dir) == []

        file_path = str(tmp_path / "file")
        with open(file_path, "w") as file:
            file.write("")
        with pytest.raises(OutputDirectoryException) as e:
            FileReportWriter(file_path, rewrite=True).prepare()
        assert e.value.reason == "not a directory"

    def test_write_report(self, tmp_path, report, tables):
        output_dir = str(tmp_path / "out")
        mesh = MeshGeometry(vertices=[[1, 0, 0], [0, 1, 0], [0, 0, 1]], faces=[[0, 1, 2]])
        paths = FileReportWriter(output_dir).write_report(report, tables, mesh)
        assert [os.path.basename(path) for path in paths] == [
            REPORT_FILE, "hessian_cp2_point.csv", "volume_scaling.csv", MESH_FILE
        ]

        with open(paths[0]) as report_file:
            content = report_file.read()
        assert content.endswith("}\n")
        data = json.loads(content)
        assert data["schema_version"] == "1.0"
        assert data["convention_ledger_hash"] == "0123abcd"
        assert data["config"]["K"] == 0.333333333333
        assert data["config"]["values"] == [1.0, None]
        assert data["failures"] == ["volume: upper bound violated"]
        assert data["riccati"] is None
        assert list(data) == sorted(data)

        with open(paths[2]) as table_file:
            assert table_file.read().splitlines() == ["lambda,V", "1,12.5663706144", "2,0.666666666667"]

        with open(paths[3]) as mesh_file:
            assert mesh_file.read().splitlines() == ["OFF", "3 1 0", "1 0 0", "0 1 0", "0 0 1", "3 0 1 2"]

    def test_identical_reports(self, tmp_path, report, tables):
        first = FileReportWriter(str(tmp_path / "first")).write_report(report, tables)
        second = FileReportWriter(str(tmp_path / "second")).write_report(report, tables)
        assert len(first) == len(second) == 3
        for first_path, second_path in zip(first, second):
            with open(first_path, "rb") as first_file, open(second_path, "rb") as second_file:
                assert first_file.read() == second_file.read()

    def test_rounded(self):
        assert format_number(2 / 3) == "0.666666666667"
        assert rounded(True) is True
        assert rounded(None) is None
        assert rounded(7) == 7
        assert rounded(float("nan")) is None
        assert rounded({"a": (0.1 + 0.2, -float("inf")), "b": "text"}) == {"a": [0.3, None], "b": "text"}
