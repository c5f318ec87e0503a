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
from kahlercomp.services import RunConfigLoader


@pytest.fixture
def run_config_loader() -> RunConfigLoader:
    return RunConfigLoader(
        run_config_parser=JSONRunConfigParser(f"{TEST_DATA_FOLDER}/run_configs/valid.json")
    )


@pytest.fixture
def run_config_loader_content_error() -> RunConfigLoader:
    return RunConfigLoader(
        run_config_parser=JSONRunConfigParser(f"{TEST_DATA_FOLDER}/run_configs/content_error.json")
    )
