# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from enum import Enum
from typing import List, Sequence

import numpy as np

from kahlercomp.domain.exceptions import SubspaceDimensionException


class SubmanifoldKind(Enum):
    """
    Kind of complex submanifold from which distances are measured.
    """
    POINT = "point"
    LINEAR = "linear"


class SubmanifoldSpec:
    """
    Complex submanifold S of a chart: either the chart origin, or the linear subvariety {z_j = 0 for j not tangent}
    spanned by a set of coordinate directions.
    """

    def __init__(self, kind: SubmanifoldKind, tangent_indices: Sequence[int] = ()):
        """
        Initialize the submanifold.

        :param kind: Kind of submanifold.
        :param tangent_indices: Coordinate indices spanning the tangent space of S. Must be empty for a point.
        :raise SubspaceDimensionException if a point is given tangent directions or if indices are repeated.
        """
        self.kind = kind
        self.tangent_indices: List[int] = [int(index) for index in tangent_indices]
        if kind == SubmanifoldKind.POINT and self.tangent_indices:
            raise SubspaceDimensionException(len(self.tangent_indices), 0)
        if len(set(self.tangent_indices)) != len(self.tangent_indices):
            raise SubspaceDimensionException(len(self.tangent_indices), len(set(self.tangent_indices)))

    @classmethod
    def point(cls) -> "SubmanifoldSpec":
        return cls(SubmanifoldKind.POINT)

    @classmethod
    def linear(cls, tangent_indices: Sequence[int]) -> "SubmanifoldSpec":
        return cls(SubmanifoldKind.LINEAR, tangent_indices)

    @property
    def p(self) -> int:
        """
        Complex dimension of S.
        """
        return len(self.tangent_indices)

    def check_dimension(self, n: int):
        """
        Check the submanifold fits in a chart of complex dimension n, leaving at least one normal direction.

        :param n: Complex dimension of the chart.
        :raise SubspaceDimensionException if p > n - 1 or if an index is out of range.
        """
        if self.p > n - 1 or any(index < 0 or index >= n for index in self.tangent_indices):
            raise SubspaceDimensionException(self.p, n)

    def normal_indices(self, n: int) -> List[int]:
        """
        Coordinate indices normal to S in a chart of complex dimension n.
        """
        return [index for index in range(n) if index not in self.tangent_indices]

    def footpoint(self, z: np.ndarray) -> np.ndarray:
        """
        Nearest point of S to a chart point in the space form charts: the normal coordinates are set to zero.

        :param z: Chart point.
        :return: The footpoint.
        """
        footpoint = np.zeros(len(z), dtype=complex)
        footpoint[self.tangent_indices] = np.asarray(z, dtype=complex)[self.tangent_indices]
        return footpoint

    def __str__(self):
        if self.kind == SubmanifoldKind.POINT:
            return "point"
        return f"linear{tuple(self.tangent_indices)}"

    def __repr__(self):
        return f"SubmanifoldSpec(kind={self.kind.value}, tangent_indices={self.tangent_indices})"
