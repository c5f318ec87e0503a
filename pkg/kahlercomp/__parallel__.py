# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from datetime import datetime
from typing import Tuple

from kahlercomp.domain.ports.dtos import RunConfiguration
from kahlercomp.services import VerificationRunner, JobFamily, JobOutcome


def run_parallel_job(
    configuration: RunConfiguration, family: JobFamily, index: int
) -> Tuple[Tuple[str, int], JobOutcome]:
    """
    Runs one verification job, in the calling process or in a worker of the pool
    """
    start_time = datetime.now()
    outcome = VerificationRunner(configuration).run_job(family, index)
    text_result = list(outcome.lines)
    for failure in outcome.failures:
        text_result.append(f"\t* FAILURE: {failure}")
    execution_time = round((datetime.now() - start_time).total_seconds(), 3)
    text_result.append(f"\t> Execution time: {execution_time} seconds\n")

    # Print all the outputs at once so the parallel executions don't overlay on each other
    print("\n".join(text_result))
    return outcome.key, outcome
