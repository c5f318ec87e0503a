# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from enum import Enum
from typing import List, Optional

import numpy as np

from .hermitian import HermitianMatrix, SymmetricComplexMatrix


class ComputationSource(Enum):
    """
    Method used to obtain a Hessian of the distance function.
    """
    RICCATI = "riccati"
    FINITE_DIFFERENCE = "finite_difference"
    JACOBI = "jacobi"
    CLOSED_FORM = "closed_form"


class EvolutionStatus(Enum):
    """
    Reason why a Hessian evolution stopped.
    """
    COMPLETE = "complete"
    POLE = "pole"
    CONJUGATE_POINT = "conjugate_point"


class HessianPair:
    """
    Complex Hessian of the distance function r in a parallel unitary frame.

    :param t: Distance to the submanifold.
    :param mixed: Matrix of r_{a bbar}.
    :param holo: Matrix of r_{a b}.
    """

    def __init__(self, t: float, mixed: HermitianMatrix, holo: SymmetricComplexMatrix):
        self.t = t
        self.mixed = mixed
        self.holo = holo

    @property
    def dim(self) -> int:
        return self.mixed.dim

    def first_column_residual(self) -> float:
        """
        Residual of the gradient identity r_{a 1} = -r_{a 1bar}.
        """
        return float(np.max(np.abs(self.holo.entries[:, 0] + self.mixed.entries[:, 0])))

    def __repr__(self):
        return f"HessianPair(t={self.t}, mixed={self.mixed}, holo={self.holo})"


class HessianEvolution:
    """
    Sequence of Hessians along a geodesic, with the diagnostics of the computation.
    """

    def __init__(
        self, pairs: List[HessianPair], source: ComputationSource, status: EvolutionStatus = EvolutionStatus.COMPLETE,
        warnings: List[str] = None
    ):
        """
        Initialize the evolution.

        :param pairs: Hessians at increasing distances.
        :param source: Method used to compute them.
        :param status: Reason why the computation stopped.
        :param warnings: Non fatal conditions met during the computation.
        """
        self.pairs = pairs
        self.source = source
        self.status = status
        self.warnings = warnings if warnings is not None else []

    @property
    def times(self) -> np.ndarray:
        return np.array([pair.t for pair in self.pairs])

    def first_column_residual(self) -> float:
        return max((pair.first_column_residual() for pair in self.pairs), default=0.0)

    def pair_at(self, t: float, tolerance: float = 1e-9) -> Optional[HessianPair]:
        """
        Get the Hessian computed at distance t, if any.
        """
        for pair in self.pairs:
            if abs(pair.t - t) <= tolerance:
                return pair
        return None

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"HessianEvolution(source={self.source.value}, pairs={len(self.pairs)}, status={self.status.value})"


class BoundFunctions:
    """
    Values of the comparison functions F, G and H at a distance r.
    """

    def __init__(self, F: float, G: float, H: float):
        self.F = F
        self.G = G
        self.H = H

    def __repr__(self):
        return f"BoundFunctions(F={self.F}, G={self.G}, H={self.H})"


class BoundMatrices:
    """
    Upper bound of the mixed Hessian of the distance to a complex submanifold of dimension p, in the adapted parallel
    frame (radial e_1, normal block, tangent block):
    F (I - P_S) + G r r* + H P_S with r = (1/sqrt(2), 0, ..., 0) and P_S the projection on the tangent block.
    """

    def __init__(self, t: float, K: float, p: int, functions: BoundFunctions, bound_mixed: HermitianMatrix):
        """
        Initialize the bound.

        :param t: Distance.
        :param K: Curvature constant of the bound.
        :param p: Complex dimension of the submanifold.
        :param functions: Values of F, G and H at t.
        :param bound_mixed: Bound matrix.
        """
        self.t = t
        self.K = K
        self.p = p
        self.functions = functions
        self.bound_mixed = bound_mixed

    @property
    def F(self) -> float:
        return self.functions.F

    @property
    def G(self) -> float:
        return self.functions.G

    @property
    def H(self) -> float:
        return self.functions.H

    @property
    def dim(self) -> int:
        return self.bound_mixed.dim

    def __repr__(self):
        return f"BoundMatrices(t={self.t}, K={self.K}, p={self.p}, bound_mixed={self.bound_mixed})"


class ComparisonVerdict:
    """
    Loewner comparison of a computed mixed Hessian with its bound.

    :param t: Distance.
    :param source: Method used to compute the Hessian.
    :param gap_min_eigenvalue: Smallest eigenvalue of bound - computed.
    :param gap_max_eigenvalue: Largest eigenvalue of bound - computed.
    :param holds: True if the smallest eigenvalue is above -psd_slack.
    """

    def __init__(
        self, t: float, source: ComputationSource, gap_min_eigenvalue: float, gap_max_eigenvalue: float, holds: bool
    ):
        self.t = t
        self.source = source
        self.gap_min_eigenvalue = gap_min_eigenvalue
        self.gap_max_eigenvalue = gap_max_eigenvalue
        self.holds = holds

    def __repr__(self):
        return (
            f"ComparisonVerdict(t={self.t}, source={self.source.value}, "
            f"gap_min_eigenvalue={self.gap_min_eigenvalue:.3e}, holds={self.holds})"
        )


class IntegrationOrderEstimate:
    """
    Observed order of an integration from the differences between runs at steps h, h/2 and h/4.

    :param order: log2 of the ratio of the two differences, None if they are at round-off level.
    :param differences: Norms of the differences between runs at (h, h/2) and (h/2, h/4).
    :param step: Coarsest step h.
    """

    def __init__(self, order: Optional[float], differences: List[float], step: float):
        self.order = order
        self.differences = differences
        self.step = step

    def __repr__(self):
        return f"IntegrationOrderEstimate(order={self.order}, step={self.step}, differences={self.differences})"


class EqualityProbeReport:
    """
    Comparison of the Hessian along a normal geodesic with the bound of a model space, where equality is expected.
    """

    def __init__(
        self, chart_name: str, submanifold: str, K: float, verdicts: List[ComparisonVerdict], max_abs_gap: float,
        holo_deviation: float, tangent_holo_norm: float, curvature_deviation: float, status: EvolutionStatus,
        tolerance: float
    ):
        """
        Initialize the report.

        :param chart_name: Name of the probed chart.
        :param submanifold: Description of the submanifold.
        :param K: Curvature constant of the bound.
        :param verdicts: Verdicts at each radius of the grid.
        :param max_abs_gap: Largest eigenvalue modulus of bound - computed over the grid.
        :param holo_deviation: Largest deviation of the holomorphic Hessian from diag(-(F + G/2), 0).
        :param tangent_holo_norm: Largest entry of the holomorphic Hessian on the block tangent to S.
        :param curvature_deviation: Largest deviation of the curvature slices from diag(2K, K I) and diag(2K, 0).
        :param status: Status of the Hessian evolution.
        :param tolerance: Tolerance under which the deviations count as equality.
        """
        self.chart_name = chart_name
        self.submanifold = submanifold
        self.K = K
        self.verdicts = verdicts
        self.max_abs_gap = max_abs_gap
        self.holo_deviation = holo_deviation
        self.tangent_holo_norm = tangent_holo_norm
        self.curvature_deviation = curvature_deviation
        self.status = status
        self.tolerance = tolerance

    @property
    def equality_holds(self) -> bool:
        return (
            self.status == EvolutionStatus.COMPLETE and self.max_abs_gap < self.tolerance
            and self.holo_deviation < self.tolerance
        )

    @property
    def curvature_matches(self) -> bool:
        return self.curvature_deviation < self.tolerance

    def __repr__(self):
        return (
            f"EqualityProbeReport(chart={self.chart_name}, submanifold={self.submanifold}, K={self.K}, "
            f"max_abs_gap={self.max_abs_gap:.3e}, equality_holds={self.equality_holds})"
        )
