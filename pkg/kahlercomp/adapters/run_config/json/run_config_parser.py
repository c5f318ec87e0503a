# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import json
from json.decoder import JSONDecodeError
from typing import Dict

from pydantic import ValidationError

from kahlercomp.domain.ports.dtos import RunConfiguration
from kahlercomp.domain.ports.run_config import RunConfigParser
from kahlercomp.domain.exceptions import KahlerCompExceptionCollector, KahlerCompExceptionList
from .exceptions import JSONParsingException, RunConfigDataValidationException


def merge_configuration(base: Dict, override: Dict) -> Dict:
    """
    Merge two configuration dictionaries. Nested dictionaries are merged, any other value of the override replaces the
    base one.

    :param base: Base configuration.
    :param override: Configuration taking precedence.
    :return: The merged configuration.
    """
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge_configuration(merged[key], value)
        else:
            merged[key] = value
    return merged


class JSONRunConfigParser(RunConfigParser):
    """
    Parse a run configuration in the JSON format.
    """

    def __init__(self, file_path: str = None, config_data: Dict = None, flag_data: Dict = None):
        """
        Initialize the parser.

        :param file_path: File containing the run configuration.
        :param config_data: Loaded content of the run configuration, used if there is no file.
        :param flag_data: Configuration given by the command line flags, overridden by the file or the loaded content.
        """
        if file_path is None and config_data is None and flag_data is None:
            raise ValueError("Specify either a json path of a run configuration or its data in the parser")
        self.file_path = file_path
        self.config_data = config_data
        self.flag_data = flag_data if flag_data is not None else {}

    def parse_run_configuration(self) -> RunConfiguration:
        """
        Parse the run configuration input to retrieve its content.

        :return: An object representing the parsed run configuration.
        """
        exception_collector = KahlerCompExceptionCollector()
        with exception_collector:
            if self.file_path is not None:
                try:
                    # Parse file
                    with open(self.file_path) as json_file:
                        config_data = json.load(json_file)
                except JSONDecodeError as e:
                    raise JSONParsingException(e.msg, e.colno, e.lineno)
            else:
                config_data = self.config_data if self.config_data is not None else {}

            try:
                # File content takes precedence over the flags
                configuration = RunConfiguration(**merge_configuration(self.flag_data, config_data))
            except ValidationError as e:
                exception_list = KahlerCompExceptionList()
                # Get validation errors and create corresponding exceptions
                for val_error in e.errors():
                    exception_list.append(
                        RunConfigDataValidationException(list(val_error["loc"]), val_error["type"], val_error["msg"])
                    )
                raise exception_list

        # Raise if any exception or return configuration
        exception_collector.raise_for_exception()
        return configuration
