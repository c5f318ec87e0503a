# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from typing import Callable

import numpy as np

# Ratio h / t used near a 1/t singularity
GRADING_FACTOR = 0.01


def rk4_step(fun: Callable[..., np.ndarray], time: float, state: np.ndarray, step: float, *args) -> np.ndarray:
    """
    One step of the classical fourth-order Runge-Kutta method.

    :param fun: Right-hand side fun(time, state, *args).
    :param time: Current time.
    :param state: Current state.
    :param step: Step size.
    :param args: Additional arguments of the right-hand side.
    :return: The state at time + step.
    """
    k1 = fun(time, state, *args)
    k2 = fun(time + step / 2, state + step / 2 * k1, *args)
    k3 = fun(time + step / 2, state + step / 2 * k2, *args)
    k4 = fun(time + step, state + step * k3, *args)
    return state + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def graded_step(time: float, step: float, next_time: float, grading: float = GRADING_FACTOR) -> float:
    """
    Step size for an integration starting close to a 1/t singularity: the step grows linearly with t until it reaches
    the nominal step, and never crosses the next output time.

    :param time: Current time (strictly positive).
    :param step: Nominal step.
    :param next_time: Next output time.
    :param grading: Maximum ratio between the step and the current time.
    :return: The step to use.
    """
    return min(step, grading * time, next_time - time)
