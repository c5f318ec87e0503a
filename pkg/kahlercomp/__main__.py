# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import sys
import logging
from datetime import datetime
from multiprocessing import get_context

from kahlercomp.adapters.run_config.json import JSONRunConfigParser
from kahlercomp.adapters.reports.files import FileReportWriter
from kahlercomp.domain.exceptions import KahlerCompException
from kahlercomp.services import RunConfigLoader, VerificationRunner
from .__parallel__ import run_parallel_job
from .parsing_lib import parse


def kahlercomp(argv) -> int:
    """
    Main entry point of kahlercomp.

    :param <command>: Verification family to run: hessian, riccati, eigen, volume or all.
    :param --config <path>: JSON run configuration, overriding the options.
    :param --output-dir <path>: Output directory of the reports.
    :param --rewrite: Rewrite the output directory if it already contains data.
    :param --cores <int>: Number of cores to use for parallelization (1 by default).
    :param --seed <int>: Seed of the randomized computations.
    :param --verbose: Verbose mode. Display debug logs.
    :param --help: Display help on the standard output.
    :return: 0 if every verdict holds, 1 if a verdict fails or a computation breaks down, 2 if the run configuration
    is invalid.
    """
    _, config_file, flag_data = parse(argv)
    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s')
    logger = logging.getLogger("kahlercomp")
    logger.setLevel(logging.DEBUG if flag_data.get("verbose", False) else logging.WARNING)

    # Start monitoring execution time
    start_time = datetime.now()

    try:
        print("Loading run configuration ...")
        run_config_loader = RunConfigLoader(
            run_config_parser=JSONRunConfigParser(file_path=config_file, flag_data=flag_data)
        )
        configuration = run_config_loader.load_run_configuration()
        writer = None
        if configuration.output_dir is not None:
            writer = FileReportWriter(configuration.output_dir, configuration.rewrite)
            writer.prepare()
    except KahlerCompException as e:
        print(f"\t* ERROR: {e}")
        return 2

    logger.setLevel(logging.DEBUG if configuration.verbose else logging.WARNING)

    runner = VerificationRunner(configuration)
    jobs = [(configuration, family, index) for family, index in runner.jobs()]
    n_jobs = len(jobs)
    cores = configuration.cores
    try:
        outcomes = []
        # If one core only has been selected run them one by one without processing pool
        if cores == 1:
            for n, data in enumerate(jobs):
                print(f"Running job {n + 1}/{n_jobs}")
                outcomes.append(run_parallel_job(*data)[1])
        # Run the jobs in a parallel processing pool batch by batch to avoid a pool failure to close
        else:
            print(f"Running {n_jobs} jobs in parallel over {cores} cores")
            n_pools = int(n_jobs / cores)
            if n_pools != n_jobs / cores:
                n_pools += 1
            for n in range(n_pools):
                with get_context("spawn").Pool(cores) as pool:
                    min_job = n * cores
                    max_job = min((n + 1) * cores, n_jobs)
                    print(f"Jobs {min_job + 1} to {max_job} / {n_jobs}")
                    outcomes += [outcome for _, outcome in pool.starmap(run_parallel_job, jobs[min_job:max_job])]

        report, tables, mesh = runner.assemble(outcomes)
        if writer is not None:
            paths = writer.write_report(report, tables, mesh)
            print(f"Reports written in {configuration.output_dir}: {len(paths)} files")
    except KahlerCompException as e:
        print(f"\t* ERROR: {e}")
        return 1

    execution_time = round((datetime.now() - start_time).total_seconds(), 3)
    print(f"Execution time: {execution_time} seconds")
    if report.failures:
        print(f"\n{len(report.failures)} FAILING CASE(S):")
        for failure in report.failures:
            print(f"\t* {failure}")
        return 1
    print("\nAll verdicts hold")
    return 0


if __name__ == "__main__":
    sys.exit(kahlercomp(sys.argv[1:]))
