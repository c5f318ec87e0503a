# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from enum import Enum
from typing import List

import numpy as np

from .kahler_chart import KahlerChart


class GeodesicStatus(Enum):
    """
    Reason why a geodesic integration stopped.
    """
    COMPLETE = "complete"
    LEFT_CHART = "left_chart"
    HIT_RADIUS = "hit_radius"


class GeodesicSample:
    """
    Point of a unit speed geodesic.

    :param t: Arclength.
    :param z: Chart point.
    :param velocity: Components v of the (1,0)-part of the velocity, with 2 g(v, conj(v)) = 1.
    """

    def __init__(self, t: float, z: np.ndarray, velocity: np.ndarray):
        self.t = t
        self.z = z
        self.velocity = velocity

    def __repr__(self):
        return f"GeodesicSample(t={self.t}, z={self.z.tolist()}, velocity={self.velocity.tolist()})"


class GeodesicPath:
    """
    Geodesic sampled at regularly spaced arclengths t_i = i * step.
    """

    def __init__(
        self, chart: KahlerChart, samples: List[GeodesicSample], step: float, status: GeodesicStatus,
        max_renormalization: float = 0.0
    ):
        """
        Initialize the path.

        :param chart: Chart in which the geodesic was integrated.
        :param samples: Samples of the geodesic.
        :param step: Arclength between two consecutive samples.
        :param status: Reason why the integration stopped.
        :param max_renormalization: Largest correction applied to the velocity norm during the integration.
        """
        self.chart = chart
        self.samples = samples
        self.step = step
        self.status = status
        self.max_renormalization = max_renormalization

    @property
    def times(self) -> np.ndarray:
        return np.array([sample.t for sample in self.samples])

    @property
    def points(self) -> np.ndarray:
        return np.array([sample.z for sample in self.samples])

    @property
    def velocities(self) -> np.ndarray:
        return np.array([sample.velocity for sample in self.samples])

    @property
    def length(self) -> float:
        return self.samples[-1].t

    def __len__(self):
        return len(self.samples)

    def __repr__(self):
        return (
            f"GeodesicPath(chart={self.chart.name}, samples={len(self.samples)}, step={self.step}, "
            f"status={self.status.value})"
        )


class ParallelFrame:
    """
    Unitary frames parallel along a geodesic path, one per sample.
    Each frame is an array whose rows are the components of e_1, ..., e_n, e_1 being sqrt(2) times the velocity.
    """

    def __init__(
        self, path: GeodesicPath, frames: List[np.ndarray], corrections: List[float], radial_residual: float
    ):
        """
        Initialize the frame.

        :param path: Geodesic path along which the frame is transported.
        :param frames: Frame at each sample of the path.
        :param corrections: Magnitude of the re-orthonormalization applied at each sample.
        :param radial_residual: Largest deviation between e_1 and sqrt(2) times the velocity.
        """
        self.path = path
        self.frames = frames
        self.corrections = corrections
        self.radial_residual = radial_residual

    @property
    def max_correction(self) -> float:
        return max(self.corrections, default=0.0)

    def __len__(self):
        return len(self.frames)

    def __repr__(self):
        return (
            f"ParallelFrame(samples={len(self.frames)}, max_correction={self.max_correction:.3e}, "
            f"radial_residual={self.radial_residual:.3e})"
        )
