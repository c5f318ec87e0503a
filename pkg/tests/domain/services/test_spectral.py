# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import cmath

import numpy as np
import pytest

from kahlercomp.domain.exceptions import (
    SubspaceDimensionException, RadiusException, ModelDiameterException, MeshDegeneracyException,
    DimensionMismatchException, NonIntegrableChartException
)
from kahlercomp.domain.models import TriangleMesh
from kahlercomp.domain.models.kahler_chart import SpaceFormChart
from kahlercomp.domain.services.hessian_compare import laplacian_of_distance
from kahlercomp.domain.services.spectral import (
    radial_profile, critical_radius, radial_dirichlet_lambda1, icosphere, check_mesh, cotangent_laplacian,
    mesh_lambda1_cp1, EIGENFUNCTION_LIBRARY, sphere_coordinates, bochner_identity_check, equality_case_checks
)


class TestRadialShooting:

    @pytest.mark.parametrize("n, s", [(1, 0), (2, 0), (2, 1), (3, 1)])
    def test_critical_radius_eigenvalue(self, n, s):
        result = radial_dirichlet_lambda1(n, s)
        assert result.at_critical_radius
        assert cmath.isclose(result.eigenvalue, n + 1, abs_tol=1e-6)
        assert abs(result.critical_discrepancy) < 1e-6
        assert result.sample_values[0] == pytest.approx(1)
        assert np.all(result.sample_values[:-1] > 0)
        assert result.bracket[0] <= result.eigenvalue <= result.bracket[1]

    def test_complementary_radii(self):
        for n in (1, 2, 3):
            for s in range(n):
                paired = critical_radius(n, n - 1 - s)
                assert cmath.isclose(critical_radius(n, s) + paired, np.pi / np.sqrt(2), abs_tol=1e-9)
        assert cmath.isclose(critical_radius(1, 0), np.pi / (2 * np.sqrt(2)), abs_tol=1e-15)

    def test_monotonicity_in_radius(self):
        small = radial_dirichlet_lambda1(2, 0, r0=0.5)
        large = radial_dirichlet_lambda1(2, 0, r0=1.5)
        assert small.eigenvalue > large.eigenvalue
        assert not small.at_critical_radius
        assert small.critical_discrepancy is None

    def test_curvature_scaling(self):
        result = radial_dirichlet_lambda1(2, 1, K=2.0)
        assert cmath.isclose(result.eigenvalue, 6, abs_tol=1e-5)

    def test_profile(self):
        profile = radial_profile(2, 0)
        assert profile.normal_dim == 2
        assert profile.delta_r(0.5) == laplacian_of_distance(1.0, 0.5, 2, 0)
        assert cmath.isclose(radial_profile(2, 0, K=0.0).delta_r(0.5), 1.5 / 0.5, rel_tol=1e-12)

    def test_exceptions(self):
        with pytest.raises(SubspaceDimensionException):
            critical_radius(2, 2)
        with pytest.raises(SubspaceDimensionException):
            radial_profile(2, -1)
        with pytest.raises(RadiusException):
            radial_dirichlet_lambda1(2, 0, r0=0)
        with pytest.raises(ModelDiameterException):
            radial_dirichlet_lambda1(2, 0, r0=2.3)


class TestSphereMesh:

    def test_icosphere(self):
        for level in range(3):
            mesh = icosphere(level, 2.0)
            assert mesh.nb_vertices == 10 * 4 ** level + 2
            assert mesh.nb_faces == 20 * 4 ** level
            np.testing.assert_allclose(np.linalg.norm(mesh.vertices, axis=1), 2.0)
            check_mesh(mesh)

    def test_check_mesh(self):
        mesh = icosphere(1)
        with pytest.raises(MeshDegeneracyException):
            check_mesh(TriangleMesh(mesh.vertices, mesh.faces[1:]))

    def test_cotangent_laplacian(self):
        mesh = icosphere(2)
        stiffness, mass = cotangent_laplacian(mesh)
        assert stiffness.shape == (mesh.nb_vertices, mesh.nb_vertices)
        np.testing.assert_allclose(stiffness @ np.ones(mesh.nb_vertices), 0, atol=1e-12)
        assert abs(stiffness - stiffness.T).max() < 1e-12
        assert cmath.isclose(mass.sum(), mesh.face_areas().sum(), rel_tol=1e-12)

    def test_first_eigenvalue(self):
        result = mesh_lambda1_cp1(mesh_resolution=1000)
        assert result.level_vertices == [162, 642, 2562]
        assert cmath.isclose(result.eigenvalue, 2, rel_tol=0.02)
        assert cmath.isclose(result.finest_eigenvalue, 2, rel_tol=0.02)
        assert 1.5 < result.convergence_order < 2.5
        clusters = result.clusters()
        assert [len(cluster) for cluster in clusters[:2]] == [3, 5]
        assert cmath.isclose(np.mean(clusters[1]), 6, rel_tol=0.05)

    def test_curvature_scaling(self):
        result = mesh_lambda1_cp1(mesh_resolution=1000, K=0.5)
        assert cmath.isclose(result.eigenvalue, 1, rel_tol=0.02)

    def test_low_resolution(self):
        with pytest.raises(MeshDegeneracyException):
            mesh_lambda1_cp1(mesh_resolution=500)


class TestBochner:

    def test_sphere_coordinates(self):
        z = np.array([0, 1, 0.5j])
        x1, x2, x3 = sphere_coordinates(z)
        np.testing.assert_allclose(x1 ** 2 + x2 ** 2 + x3 ** 2, 1)
        np.testing.assert_allclose([x1[0], x2[0], x3[0]], [0, 0, 1])
        np.testing.assert_allclose([x1[1], x2[1], x3[1]], [1, 0, 0])
        _, _, reflected = sphere_coordinates(z, reflected=True)
        np.testing.assert_allclose(reflected, -x3)

    @pytest.mark.parametrize("name", ["x1", "x3", "zonal_quadratic"])
    def test_identity(self, name):
        report = bochner_identity_check(EIGENFUNCTION_LIBRARY[name])
        assert report.residual < 1e-3
        assert report.eigen_residual < 1e-3

    def test_identity_on_scaled_sphere(self):
        report = bochner_identity_check(EIGENFUNCTION_LIBRARY["x1"], chart=SpaceFormChart(1, 2.0))
        assert report.eigenvalue == 4
        assert report.residual < 1e-3

    def test_wrong_eigenvalue(self):
        report = bochner_identity_check(EIGENFUNCTION_LIBRARY["x1"], eigenvalue=3.0)
        assert report.eigen_residual > 0.1
        assert report.residual > 0.1

    def test_equality_case(self):
        for name in ("x1", "x3"):
            report = equality_case_checks(EIGENFUNCTION_LIBRARY[name])
            assert report.uab_norm < 1e-4
            assert report.phi_variation < 1e-4
            assert report.holds()
        assert not equality_case_checks(EIGENFUNCTION_LIBRARY["negative_control"]).holds()
        assert not equality_case_checks(EIGENFUNCTION_LIBRARY["zonal_quadratic"]).holds()

    def test_chart_checks(self):
        with pytest.raises(DimensionMismatchException):
            bochner_identity_check(EIGENFUNCTION_LIBRARY["x1"], chart=SpaceFormChart(2, 1.0))
        with pytest.raises(NonIntegrableChartException):
            equality_case_checks(EIGENFUNCTION_LIBRARY["x1"], chart=SpaceFormChart(1, -1.0))
