# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from enum import Enum
from typing import Callable, List, Optional

import numpy as np
from scipy.interpolate import CubicSpline

from kahlercomp.domain.exceptions import DimensionMismatchException, EmptySampleException
from .hermitian import HermitianMatrix

# Map from a time to a Hermitian matrix, given as an array
MatrixCurve = Callable[[float], np.ndarray]


class CurveStatus(Enum):
    """
    Reason why the integration of a Riccati curve stopped.
    """
    COMPLETE = "complete"
    BLOW_UP = "blow_up"


class HermitianCurve:
    """
    Curve of Hermitian matrices known at increasing sample times, interpolated by cubic splines in between.
    """

    def __init__(
        self, times: np.ndarray, values: np.ndarray, T: float, singular_at_zero: bool = False,
        status: CurveStatus = CurveStatus.COMPLETE
    ):
        """
        Initialize the curve.

        :param times: Increasing sample times, of shape (m,).
        :param values: Hermitian matrices at the sample times, of shape (m, n, n).
        :param T: Time up to which the curve was requested.
        :param singular_at_zero: True if the curve blows up like C/t as t -> 0+.
        :param status: Reason why the integration stopped.
        :raise EmptySampleException if there is no sample.
        :raise DimensionMismatchException if the times and the values do not match.
        """
        self.times = np.asarray(times, dtype=float)
        self.values = np.asarray(values, dtype=complex)
        if len(self.times) == 0:
            raise EmptySampleException("HermitianCurve")
        if self.values.ndim != 3 or self.values.shape[0] != len(self.times):
            raise DimensionMismatchException((len(self.times), -1, -1), self.values.shape)
        self.T = T
        self.singular_at_zero = singular_at_zero
        self.status = status
        self._spline = None
        if len(self.times) > 1:
            self._spline = CubicSpline(self.times, np.stack([self.values.real, self.values.imag], axis=1), axis=0)

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    def __call__(self, t: float) -> HermitianMatrix:
        """
        Evaluate the curve.

        :param t: Time within the samples.
        :return: The Hermitian matrix at t.
        """
        if self._spline is None:
            return HermitianMatrix(self.values[0])
        real, imag = self._spline(t)
        value = real + 1j * imag
        return HermitianMatrix((value + value.conj().T) / 2)

    def scaled_increments(self, levels: int = 4) -> List[float]:
        """
        Differences of t X(t) between consecutive points of the dyadic grid t_0 2^k, which shrink when the curve is
        singular like C/t at 0.

        :param levels: Number of dyadic points.
        :return: Norms of the consecutive differences.
        """
        grid = [self.times[0] * 2 ** k for k in range(levels) if self.times[0] * 2 ** k <= self.t_end]
        scaled = [t * self(t).entries for t in grid]
        return [float(np.linalg.norm(second - first)) for first, second in zip(scaled[:-1], scaled[1:])]

    def __len__(self):
        return len(self.times)

    def __repr__(self):
        return f"HermitianCurve(dim={self.dim}, samples={len(self)}, t_end={self.t_end}, status={self.status.value})"


class RiccatiInstance:
    """
    Pair of Riccati problems X' = R - X^2 sharing their seed, with R_A <= R_B expected at all times.
    """

    def __init__(
        self, index: int, n: int, T: float, t0: float, R_A: MatrixCurve, R_B: MatrixCurve, seed: HermitianMatrix,
        singular_seed: bool = True
    ):
        """
        Initialize the instance.

        :param index: Index of the instance in its suite.
        :param n: Dimension of the matrices.
        :param T: End time.
        :param t0: Seed time.
        :param R_A: Right side of the smaller problem.
        :param R_B: Right side of the larger problem.
        :param seed: Common value at t0.
        :param singular_seed: True if the seed has the pattern P / t0 + S.
        """
        self.index = index
        self.n = n
        self.T = T
        self.t0 = t0
        self.R_A = R_A
        self.R_B = R_B
        self.seed = seed
        self.singular_seed = singular_seed

    def __repr__(self):
        return f"RiccatiInstance(index={self.index}, n={self.n}, T={self.T}, t0={self.t0})"


class ComparisonOutcome(Enum):
    """
    Outcome of the comparison of the two solutions of an instance.
    """
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESIS_VIOLATION = "hypothesis_violation"


class ComparisonResult:
    """
    Result of the comparison A <= B on the common sample grid of an instance.

    :param index: Index of the instance.
    :param outcome: Outcome of the comparison.
    :param worst_margin: Smallest eigenvalue of B - A over the grid, or of R_B - R_A for a hypothesis violation.
    :param worst_t: Time of the worst margin.
    :param truncated: True if one of the solutions blew up before T.
    """

    def __init__(
        self, index: int, outcome: ComparisonOutcome, worst_margin: float, worst_t: Optional[float],
        truncated: bool = False
    ):
        self.index = index
        self.outcome = outcome
        self.worst_margin = worst_margin
        self.worst_t = worst_t
        self.truncated = truncated

    @property
    def holds(self) -> bool:
        return self.outcome == ComparisonOutcome.HOLDS

    def __repr__(self):
        return (
            f"ComparisonResult(index={self.index}, outcome={self.outcome.value}, worst_margin={self.worst_margin:.3e}, "
            f"worst_t={self.worst_t})"
        )


class RiccatiSuiteSummary:
    """
    Summary of a randomized suite of comparison checks.
    """

    def __init__(self, suite_seed: int, results: List[ComparisonResult]):
        self.suite_seed = suite_seed
        self.results = sorted(results, key=lambda result: result.index)

    @property
    def instances(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> int:
        return sum(1 for result in self.results if result.outcome == ComparisonOutcome.VIOLATED)

    @property
    def hypothesis_violations(self) -> int:
        return sum(1 for result in self.results if result.outcome == ComparisonOutcome.HYPOTHESIS_VIOLATION)

    @property
    def worst_margin(self) -> float:
        margins = [
            result.worst_margin for result in self.results
            if result.outcome != ComparisonOutcome.HYPOTHESIS_VIOLATION
        ]
        return min(margins, default=float("inf"))

    def __repr__(self):
        return (
            f"RiccatiSuiteSummary(instances={self.instances}, failures={self.failures}, "
            f"worst_margin={self.worst_margin:.3e})"
        )
