# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import pytest

from kahlercomp.domain.exceptions import KahlerCompExceptionList
from kahlercomp.domain.ports.dtos import Command, EigenMode
from kahlercomp.adapters.run_config.json import JSONRunConfigParser
from kahlercomp.adapters.run_config.json.exceptions import JSONParsingException, RunConfigDataValidationException
from kahlercomp.adapters.run_config.json.run_config_parser import merge_configuration


class TestJSONRunConfigParser:

    def test_parse_run_configuration(
        self, json_run_config_parser, json_run_config_parser_parsing_error, json_run_config_parser_content_error,
        valid_run_configuration
    ):
        # Complete configuration
        configuration = json_run_config_parser.parse_run_configuration()
        assert configuration == valid_run_configuration
        assert configuration.hessian[0].chart.K == 1
        assert configuration.hessian[1].bound_curvature == 0
        assert configuration.runs(Command.HESSIAN)
        assert not configuration.runs(Command.VOLUME)

        # Parsing error
        with pytest.raises(KahlerCompExceptionList) as error_list:
            json_run_config_parser_parsing_error.parse_run_configuration()
        errors = error_list.value.exceptions
        assert len(errors) == 1
        exception = errors[0]
        assert type(exception) == JSONParsingException
        assert exception.msg == "Expecting property name enclosed in double quotes"
        assert (exception.row, exception.column) == (4, 5)

        # Content error
        with pytest.raises(KahlerCompExceptionList) as error_list:
            json_run_config_parser_content_error.parse_run_configuration()
        errors = error_list.value.exceptions
        assert len(errors) == 4
        assert all(type(error) == RunConfigDataValidationException for error in errors)
        assert (errors[0].location, errors[0].category) == (["command"], "value_error.missing")
        assert (errors[1].location, errors[1].category) == (["suite_seed"], "value_error.number.not_ge")
        assert (errors[2].location, errors[2].category) == (["riccati", "dim"], "value_error.number.not_le")
        assert (errors[3].location, errors[3].category) == (["eigen", "mode"], "type_error.enum")

    def test_flag_precedence(self):
        parser = JSONRunConfigParser(
            config_data={"command": "eigen", "eigen": {"n": 3}},
            flag_data={"command": "all", "suite_seed": 9, "eigen": {"n": 2, "s": 0}}
        )
        configuration = parser.parse_run_configuration()
        assert configuration.command == Command.EIGEN
        assert configuration.suite_seed == 9
        assert configuration.eigen.n == 3
        assert configuration.eigen.s == 0
        assert configuration.eigen.mode == EigenMode.ALL

        configuration = JSONRunConfigParser(flag_data={"command": "volume"}).parse_run_configuration()
        assert configuration.command == Command.VOLUME
        assert len(configuration.hessian) == 1

    def test_chart_validation(self):
        parser = JSONRunConfigParser(
            config_data={"command": "hessian", "hessian": [{"chart": {"label": "fubini_study", "K": -1}}]}
        )
        with pytest.raises(KahlerCompExceptionList) as error_list:
            parser.parse_run_configuration()
        errors = error_list.value.exceptions
        assert len(errors) == 1
        assert errors[0].location == ["hessian", 0, "chart", "__root__"]
        assert errors[0].category == "value_error"

        parser = JSONRunConfigParser(
            config_data={"command": "hessian", "hessian": [{"r_min": 0.5, "r_max": 0.2}]}
        )
        with pytest.raises(KahlerCompExceptionList) as error_list:
            parser.parse_run_configuration()
        assert error_list.value.exceptions[0].location == ["hessian", 0, "__root__"]

    def test_merge_configuration(self):
        base = {"a": 1, "b": {"c": 2, "d": 3}}
        merged = merge_configuration(base, {"b": {"c": 4}, "e": 5})
        assert merged == {"a": 1, "b": {"c": 4, "d": 3}, "e": 5}
        assert base == {"a": 1, "b": {"c": 2, "d": 3}}

    def test_missing_input(self):
        with pytest.raises(ValueError):
            JSONRunConfigParser()
