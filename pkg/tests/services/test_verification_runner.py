# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import json

import numpy as np
import pytest

from kahlercomp.adapters.run_config.json import JSONRunConfigParser
from kahlercomp.domain.ports.dtos import RunConfiguration
from kahlercomp.services import RunConfigLoader, VerificationRunner, JobFamily
from kahlercomp.services.verification_runner import HESSIAN_CURVES_FILE, GEODESIC_FRAMES_FILE, VOLUME_BANDS_FILE


def configuration(config_data: dict) -> RunConfiguration:
    return RunConfigLoader(run_config_parser=JSONRunConfigParser(config_data=config_data)).load_run_configuration()


@pytest.fixture
def hessian_configuration() -> RunConfiguration:
    return configuration({
        "command": "hessian",
        "suite_seed": 1,
        "hessian": [{
            "chart": {"label": "fubini_study", "n": 2},
            "r_points": 5,
            "oracles": ["jacobi"],
            "oracle_points": 2,
            "bisectional_points": 2,
            "bisectional_samples": 50
        }]
    })


@pytest.fixture
def riccati_configuration() -> RunConfiguration:
    return configuration({"command": "riccati", "suite_seed": 11, "riccati": {"instances": 6, "dim": 2}})


class TestVerificationRunner:

    def test_jobs(self):
        runner = VerificationRunner(configuration({"command": "all", "hessian": [{}, {"r_max": 1.5}]}))
        assert runner.radial_pairs() == [(2, 0), (2, 1)]
        assert runner.jobs() == [
            (JobFamily.HESSIAN, 0), (JobFamily.HESSIAN, 1), (JobFamily.RICCATI, 0), (JobFamily.RADIAL, 0),
            (JobFamily.RADIAL, 1), (JobFamily.MESH, 0), (JobFamily.BOCHNER, 0), (JobFamily.VOLUME, 0)
        ]

        runner = VerificationRunner(configuration({"command": "eigen", "eigen": {"mode": "radial", "n": 3, "s": 1}}))
        assert runner.radial_pairs() == [(3, 1)]
        assert runner.jobs() == [(JobFamily.RADIAL, 0)]

    def test_run_hessian(self, hessian_configuration):
        runner = VerificationRunner(hessian_configuration)
        report, tables, mesh = runner.assemble(runner.run())
        assert report.holds
        assert mesh is None
        assert sorted(tables) == [f"{GEODESIC_FRAMES_FILE}.csv", f"{HESSIAN_CURVES_FILE}.csv"]
        section = report.hessian[0]
        assert (section.space, section.submanifold, section.K_bound, section.n, section.p) == (
            "fubini_study(n=2,K=1)", "point", 1, 2, 0
        )
        assert section.status == "complete"
        assert len(section.verdicts) == 7
        assert [record.source for record in section.verdicts].count("riccati") == 5
        assert [record.source for record in section.verdicts].count("jacobi") == 2
        assert all(record.holds for record in section.verdicts)
        assert section.min_gap == min(record.gap_min_eigenvalue for record in section.verdicts[:5])
        assert section.oracle_sources == ["riccati", "jacobi"]
        assert section.oracle_deviation < 1e-4
        assert section.equality is not None and section.equality.equality_holds
        curves = tables[f"{HESSIAN_CURVES_FILE}.csv"]
        assert curves.columns[:4] == ["t", "F", "G", "H"]
        assert len(curves.rows) == 5
        np.testing.assert_allclose(
            [row[0] for row in curves.rows], np.linspace(0.1, 0.9 * np.pi / np.sqrt(2), 5), atol=1e-9
        )

    def test_run_riccati(self, riccati_configuration):
        runner = VerificationRunner(riccati_configuration)
        outcomes = runner.run()
        assert len(outcomes) == 1
        section = outcomes[0].section
        assert (section.suite_seed, section.instances) == (11, 6)
        assert section.failures == 0
        assert section.failing_instances == []
        assert [check.R for check in section.scalar_checks] == [1.0, 0.0, -1.0]
        assert all(check.relative_deviation < 1e-7 for check in section.scalar_checks)
        assert section.holds

    def test_run_eigen(self):
        runner = VerificationRunner(configuration({"command": "eigen", "eigen": {"mode": "radial", "n": 2, "s": 1}}))
        report, tables, mesh = runner.assemble(runner.run())
        assert report.holds
        assert tables == {}
        assert [(record.n, record.s) for record in report.eigen.radial] == [(2, 0), (2, 1)]
        for record in report.eigen.radial:
            assert abs(record.eigenvalue - 3) < 1e-6
        assert report.eigen.complementarity < 1e-9
        assert report.eigen.mesh is None

    def test_run_volume(self):
        runner = VerificationRunner(configuration({"command": "volume", "volume": {"n": 1, "k1": 1.0, "k2": 3.0}}))
        report, tables, _ = runner.assemble(runner.run())
        assert report.holds
        volume = report.volume
        assert abs(volume.V_formula - 2 * np.pi) < 1e-9
        assert volume.relative_deviation < 1e-3
        assert volume.lower_holds and volume.upper_holds
        band = tables[VOLUME_BANDS_FILE]
        assert band.columns == ["k", "V_k"]
        assert len(band.rows) == 11

        # CP^1 of K=1 has scalar curvature 2 that exceeds k2
        runner = VerificationRunner(configuration({"command": "volume", "volume": {"n": 1, "k1": 0.5, "k2": 1.0}}))
        report, _, _ = runner.assemble(runner.run())
        assert not report.holds
        assert report.failures[0].startswith("volume: V=")

    def test_assemble(self, riccati_configuration):
        runner = VerificationRunner(riccati_configuration)
        outcomes = runner.run()
        report, _, _ = runner.assemble(list(reversed(outcomes)))
        assert report.schema_version == "1.0"
        assert len(report.convention_ledger_hash) > 0
        assert report.hessian == []
        assert report.eigen is None and report.volume is None
        assert report.config["command"] == "riccati"
        assert "output_dir" not in report.config and "cores" not in report.config

        # Identical runs produce identical reports
        rerun = VerificationRunner(riccati_configuration)
        second, _, _ = rerun.assemble(rerun.run())
        assert json.dumps(report.dict(), sort_keys=True) == json.dumps(second.dict(), sort_keys=True)
