# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import numpy as np
import pytest

from kahlercomp.domain.models import (
    BochnerIdentityReport, EqualityCaseReport, TriangleMesh, MeshSpectralResult, SpectralMethod
)
from kahlercomp.domain.exceptions import MeshDegeneracyException


class TestSpectralModels:

    def test_bochner_report(self):
        report = BochnerIdentityReport(2.0, gradient_energy=1.0, hessian_energy=0.0, ricci_energy=2.0, eigen_residual=0)
        assert report.lhs == 2
        assert report.rhs == 2
        assert report.residual == 0
        report = BochnerIdentityReport(2.0, gradient_energy=1.0, hessian_energy=1.0, ricci_energy=2.0, eigen_residual=0)
        assert report.residual == 1 / 3
        assert BochnerIdentityReport(0.0, 0.0, 0.0, 0.0, 0.0).residual == 0

    def test_equality_case_report(self):
        assert EqualityCaseReport(1e-6, 1e-6, 2.0).holds()
        assert not EqualityCaseReport(1e-6, 1e-2, 2.0).holds()
        assert EqualityCaseReport(1e-3, 1e-6, 2.0).holds(tolerance=1e-2)

    def test_mesh(self):
        mesh = TriangleMesh(np.eye(3), [[0, 1, 2]])
        assert mesh.nb_vertices == 3
        assert mesh.nb_faces == 1
        np.testing.assert_allclose(mesh.face_areas(), [np.sqrt(3) / 2], atol=1e-15)
        assert np.isclose(mesh.mean_edge_length(), np.sqrt(2))
        with pytest.raises(MeshDegeneracyException):
            TriangleMesh(np.zeros((3, 2)), [[0, 1, 2]])

        result = MeshSpectralResult(
            eigenvalue=2.0, residual=1e-12, mesh=mesh, spectrum=[0.0, 2.0, 2.01, 1.99, 6.0, 6.1],
            level_eigenvalues=[2.1, 2.02, 2.005], level_vertices=[162, 642, 2562], convergence_order=2.0
        )
        assert result.method == SpectralMethod.MESH
        assert result.finest_eigenvalue == 2.005
        assert result.clusters() == [[2.0, 2.01, 1.99], [6.0, 6.1]]
