# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import numpy as np

from kahlercomp.domain.models import (
    HermitianMatrix, SymmetricComplexMatrix, HessianPair, HessianEvolution, ComputationSource, EvolutionStatus
)


class TestHessianEvolution:

    def test_hessian_evolution(self):
        pairs = [
            HessianPair(
                t, HermitianMatrix.diagonal([1 / (2 * t), 1 / t]), SymmetricComplexMatrix.diagonal([-1 / (2 * t), 0])
            )
            for t in (0.5, 1.0)
        ]
        evolution = HessianEvolution(pairs, ComputationSource.CLOSED_FORM)
        assert len(evolution) == 2
        assert evolution.status == EvolutionStatus.COMPLETE
        assert evolution.warnings == []
        np.testing.assert_array_equal(evolution.times, [0.5, 1.0])
        assert evolution.pair_at(1.0 + 1e-12) is pairs[1]
        assert evolution.pair_at(0.75) is None

        # Flat Hessians satisfy r_a1 = -r_a1bar
        assert evolution.first_column_residual() == 0
        assert pairs[0].dim == 2
        assert HessianEvolution([], ComputationSource.JACOBI).first_column_residual() == 0
