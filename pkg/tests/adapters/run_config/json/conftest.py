# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import pytest

from tests import TEST_DATA_FOLDER
from kahlercomp.adapters.run_config.json import JSONRunConfigParser
from kahlercomp.domain.ports.dtos import (
    RunConfiguration, Command, ChartLabel, ChartConfiguration, SubmanifoldKind, SubmanifoldConfiguration,
    ToleranceConfiguration, HessianConfiguration, OracleType
)


@pytest.fixture
def json_run_config_parser() -> JSONRunConfigParser:
    return JSONRunConfigParser(f"{TEST_DATA_FOLDER}/run_configs/valid.json")


@pytest.fixture
def json_run_config_parser_parsing_error() -> JSONRunConfigParser:
    return JSONRunConfigParser(f"{TEST_DATA_FOLDER}/run_configs/parsing_error.json")


@pytest.fixture
def json_run_config_parser_content_error() -> JSONRunConfigParser:
    return JSONRunConfigParser(f"{TEST_DATA_FOLDER}/run_configs/content_error.json")


@pytest.fixture
def valid_run_configuration() -> RunConfiguration:
    return RunConfiguration(
        command=Command.HESSIAN,
        suite_seed=3,
        tolerance=ToleranceConfiguration(psd_slack=1e-6),
        hessian=[
            HessianConfiguration(
                chart=ChartConfiguration(label=ChartLabel.FUBINI_STUDY, n=2),
                submanifold=SubmanifoldConfiguration(kind=SubmanifoldKind.LINEAR, tangent_indices=[1]),
                r_max=1.0,
                r_points=5
            ),
            HessianConfiguration(
                chart=ChartConfiguration(
                    label=ChartLabel.PRODUCT,
                    n=2,
                    factors=[
                        ChartConfiguration(label=ChartLabel.FUBINI_STUDY, n=1),
                        ChartConfiguration(label=ChartLabel.FUBINI_STUDY, n=1)
                    ]
                ),
                r_max=2.0,
                oracles=[OracleType.JACOBI]
            )
        ]
    )
