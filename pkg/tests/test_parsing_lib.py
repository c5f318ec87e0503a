# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import pytest

from kahlercomp.parsing_lib import parse, OUTPUT_DIR_VARIABLE, DEFAULT_OUTPUT_DIR


class TestParse:

    def test_hessian_flags(self, monkeypatch):
        monkeypatch.delenv(OUTPUT_DIR_VARIABLE, raising=False)
        command, config_file, flag_data = parse(
            ["hessian", "--space", "fs", "--n", "3", "--K", "2", "--p", "1", "--rpoints", "7", "--step", "0.01",
             "--oracles", "jacobi", "--seed", "4"]
        )
        assert command == "hessian"
        assert config_file is None
        assert flag_data == {
            "command": "hessian",
            "suite_seed": 4,
            "output_dir": DEFAULT_OUTPUT_DIR,
            "hessian": [{
                "chart": {"label": "fubini_study", "n": 3, "K": 2.0},
                "submanifold": {"kind": "linear", "tangent_indices": [1]},
                "r_points": 7,
                "step": 0.01,
                "oracles": ["jacobi"]
            }],
            "riccati": {"step": 0.01}
        }

    def test_product_factors(self, monkeypatch):
        monkeypatch.setenv(OUTPUT_DIR_VARIABLE, "/tmp/reports")
        _, _, flag_data = parse(["hessian", "--factors", "1:1,1:-1", "--cores", "2", "--rewrite"])
        assert flag_data["output_dir"] == "/tmp/reports"
        assert (flag_data["cores"], flag_data["rewrite"]) == (2, True)
        assert flag_data["hessian"][0]["chart"] == {
            "label": "product",
            "n": 2,
            "factors": [
                {"label": "fubini_study", "n": 1, "K": 1.0},
                {"label": "complex_hyperbolic", "n": 1, "K": -1.0}
            ]
        }

    def test_shared_flags(self):
        # Space options only reach the families of the command
        _, _, flag_data = parse(["eigen", "--n", "3", "--s", "0", "--mode", "radial"])
        assert flag_data["eigen"] == {"n": 3, "s": 0, "mode": "radial"}
        assert "hessian" not in flag_data and "volume" not in flag_data

        _, _, flag_data = parse(["all", "--K", "0.5", "--lambdas", "1,3", "--psd-slack", "1e-7"])
        assert flag_data["hessian"] == [{"chart": {"K": 0.5}}]
        assert flag_data["eigen"] == {"K": 0.5}
        assert flag_data["volume"] == {"K": 0.5, "lambda_values": [1.0, 3.0]}
        assert flag_data["tolerance"] == {"psd_slack": 1e-7}

    def test_config_file(self):
        command, config_file, flag_data = parse(["--config", "tests/data/run_configs/valid.json"])
        assert command is None
        assert config_file == "tests/data/run_configs/valid.json"
        assert "command" not in flag_data

    def test_errors(self):
        for argv in (
            [], ["spiral"], ["hessian", "volume"], ["hessian", "--space", "sphere"], ["hessian", "--n", "two"],
            ["hessian", "--unknown"], ["--config", "tests/data/run_configs/missing.json"]
        ):
            with pytest.raises(SystemExit) as e:
                parse(argv)
            assert e.value.code == 2

        with pytest.raises(SystemExit) as e:
            parse(["--help"])
        assert e.value.code is None
