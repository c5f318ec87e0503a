# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import List, Union

from kahlercomp.domain.exceptions import KahlerCompException


class JSONParsingException(KahlerCompException):
    """
    The run configuration is not valid JSON.
    """

    def __init__(self, msg: str, column: int, row: int):
        """
        Initialization.

        :param msg: Decoder message.
        :param column: Column of the offending character.
        :param row: Line of the offending character.
        """
        self.msg = msg
        self.column = column
        self.row = row

    def __str__(self) -> str:
        return f"Run configuration is not valid JSON (line {self.row}, column {self.column}): {self.msg}\n"


class RunConfigDataValidationException(KahlerCompException):
    """
    A field of the run configuration was rejected by its model.

    The location is the path of keys and list indices leading to the field, ending with __root__ when a whole section
    is rejected. The category is the pydantic error type, such as value_error.missing or type_error.enum.
    """

    def __init__(self, location: List[Union[str, int]], category: str, msg: str = None):
        """
        Initialization.

        :param location: Path to the rejected field.
        :param category: Pydantic error type.
        :param msg: Pydantic error message.
        """
        self.location = location
        self.category = category
        self.msg = msg

    def __str__(self) -> str:
        message = f"Invalid run configuration at {'.'.join(str(key) for key in self.location)} ({self.category})"
        if self.msg is not None:
            message = f"{message}: {self.msg}"
        return f"{message}\n"
