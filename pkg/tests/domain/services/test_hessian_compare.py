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
    RadiusException, ModelDiameterException, EpsilonException, FrameMismatchException, SubspaceDimensionException
)
from kahlercomp.domain.models import (
    HermitianMatrix, SymmetricComplexMatrix, HessianPair, EvolutionStatus, SubmanifoldSpec, TolerancePolicy
)
from kahlercomp.domain.services.geodesy import normal_geodesic
from kahlercomp.domain.services.hessian_compare import (
    bound_functions, bound_at, laplacian_of_distance, riccati_seed, evolve_hessian, estimate_integration_order,
    fd_hessian_oracle, jacobi_oracle, verdict, oracle_triangle, congruence_reduction_check, equality_probe,
    seed_sensitivity, curvature_monotonicity
)


class TestBounds:

    def test_flat_bound(self):
        functions = bound_functions(0, 2.0)
        assert functions.F == 0.5
        assert functions.G == -0.5
        assert functions.H == 0

    def test_fubini_study_bound(self):
        for t in (0.1, 0.5, 1.2, 2.0):
            functions = bound_functions(1.0, t)
            assert cmath.isclose(functions.F + functions.G / 2, np.cos(np.sqrt(2) * t) / np.sin(np.sqrt(2) * t) /
                                 np.sqrt(2), abs_tol=1e-12)
            assert cmath.isclose(functions.F, np.cos(t / np.sqrt(2)) / np.sin(t / np.sqrt(2)) / np.sqrt(2),
                                 abs_tol=1e-12)
            assert cmath.isclose(functions.H, -np.tan(t / np.sqrt(2)) / np.sqrt(2), abs_tol=1e-12)

    def test_hyperbolic_bound(self):
        t = 1.0
        functions = bound_functions(-1.0, t)
        assert cmath.isclose(functions.F, np.cosh(t / np.sqrt(2)) / np.sinh(t / np.sqrt(2)) / np.sqrt(2),
                             abs_tol=1e-12)
        assert cmath.isclose(functions.H, np.tanh(t / np.sqrt(2)) / np.sqrt(2), abs_tol=1e-12)

    def test_series_branch(self):
        for u in (0.99e-4, -0.99e-4):
            r = np.sqrt(2 * abs(u))
            functions = bound_functions(np.sign(u), r)
            root = np.sqrt(abs(u))
            if u > 0:
                expected_F, expected_H = root / np.tan(root) / r, -np.sqrt(u) * np.tan(root) / r
            else:
                expected_F, expected_H = root / np.tanh(root) / r, root * np.tanh(root) / r
            assert cmath.isclose(functions.F, expected_F, rel_tol=1e-12)
            assert cmath.isclose(functions.H, expected_H, rel_tol=1e-9)

    def test_bound_exceptions(self):
        with pytest.raises(RadiusException) as e:
            bound_functions(1.0, 0)
        assert e.value.radius == 0
        with pytest.raises(ModelDiameterException) as e:
            bound_functions(1.0, 2.3)
        assert e.value.K == 1
        with pytest.raises(SubspaceDimensionException):
            bound_at(1.0, 1.0, 2, SubmanifoldSpec.linear([0, 1]))

    def test_bound_at(self, line_spec):
        t = np.pi / (2 * np.sqrt(2))
        bound = bound_at(1.0, t, 2, line_spec)
        assert bound.dim == 2
        assert cmath.isclose(bound.bound_mixed.entries[0, 0], 0, abs_tol=1e-12)
        assert bound.bound_mixed.entries[1, 1] == bound.H
        bound = bound_at(0.0, 1.0, 3, SubmanifoldSpec.point())
        np.testing.assert_allclose(np.diag(bound.bound_mixed.entries), [0.5, 1, 1])

    def test_laplacian_of_distance(self):
        assert cmath.isclose(laplacian_of_distance(0, 2.0, 2, 0), 0.25 + 0.5, abs_tol=1e-15)
        t = 0.7
        functions = bound_functions(1.0, t)
        assert cmath.isclose(
            laplacian_of_distance(1.0, t, 3, 1), 2 * functions.F + functions.G / 2 + functions.H, abs_tol=1e-15
        )


class TestRiccatiEvolution:

    def test_seed(self, line_spec):
        seed = riccati_seed(3, SubmanifoldSpec.point(), 1e-2)
        np.testing.assert_allclose(np.diag(seed.mixed.entries), [50, 100, 100])
        assert seed.holo.entries[0, 0] == -50
        seed = riccati_seed(2, line_spec, 1e-2)
        np.testing.assert_allclose(np.diag(seed.mixed.entries), [50, 0])
        with pytest.raises(EpsilonException):
            riccati_seed(2, line_spec, 0)

    def test_flat_equality(self, flat_chart, point_spec):
        times = np.linspace(0.1, 3, 11)
        _, frame = normal_geodesic(flat_chart, point_spec, 3.1, 1e-3)
        evolution = evolve_hessian(frame, point_spec, output_times=times)
        assert evolution.status == EvolutionStatus.COMPLETE
        assert len(evolution) == 11
        for pair in evolution.pairs:
            np.testing.assert_allclose(pair.mixed.entries, np.diag([1 / (2 * pair.t), 1 / pair.t]), atol=1e-6)
            np.testing.assert_allclose(pair.holo.entries, np.diag([-1 / (2 * pair.t), 0]), atol=1e-6)
            bound = bound_at(0, pair.t, 2, point_spec)
            np.testing.assert_allclose(pair.mixed.entries, bound.bound_mixed.entries, atol=1e-6)
            assert pair.first_column_residual() < 1e-6

    def test_pole_truncation(self, cp2_point_frame, point_spec):
        evolution = evolve_hessian(cp2_point_frame, point_spec, output_times=[0.5, 1.5], curvature_scale=4.0)
        assert evolution.status == EvolutionStatus.POLE
        assert len(evolution) == 1
        assert len(evolution.warnings) == 1

    def test_integration_order(self, cp2_point_frame, point_spec):
        estimate = estimate_integration_order(cp2_point_frame, point_spec, 0.5, 1.0, 0.05)
        assert estimate.order is not None
        assert estimate.order > 3.5

    def test_seed_sensitivity(self, cp2_point_frame, point_spec):
        assert seed_sensitivity(cp2_point_frame, point_spec, 1.0) < 1e-6

    def test_curvature_monotonicity(self, cp2_point_frame, point_spec):
        assert curvature_monotonicity(cp2_point_frame, point_spec, [0.5, 1.0, 1.5]) > -1e-9

    def test_evolution_exceptions(self, cp2_point_frame, point_spec):
        with pytest.raises(EpsilonException):
            evolve_hessian(cp2_point_frame, point_spec, eps=0)
        with pytest.raises(EpsilonException):
            evolve_hessian(cp2_point_frame, point_spec, eps=10)


class TestComparison:

    def test_model_equality(self, cp2_chart, point_spec):
        t_grid = np.linspace(0.1, 0.9 * np.pi / np.sqrt(2), 9)
        report = equality_probe(cp2_chart, point_spec, t_grid, 1.0)
        assert report.status == EvolutionStatus.COMPLETE
        assert len(report.verdicts) == 9
        assert all(pair_verdict.holds for pair_verdict in report.verdicts)
        assert report.max_abs_gap < 1e-5
        assert report.holo_deviation < 1e-5
        assert report.curvature_deviation < 1e-8
        assert report.equality_holds
        assert report.curvature_matches

    def test_submanifold_equality(self, cp2_chart, line_spec):
        crossing = np.pi / (2 * np.sqrt(2))
        report = equality_probe(cp2_chart, line_spec, [0.2, 0.6, crossing, 1.5], 1.0)
        assert report.status == EvolutionStatus.COMPLETE
        assert report.max_abs_gap < 1e-5
        assert all(pair_verdict.holds for pair_verdict in report.verdicts)

    def test_hyperbolic_equality(self, hyperbolic_chart, point_spec):
        report = equality_probe(hyperbolic_chart, point_spec, [0.2, 0.8, 1.6], -1.0)
        assert report.max_abs_gap < 1e-5
        assert report.curvature_deviation < 1e-8

    def test_hyperbolic_submanifold_equality(self, hyperbolic_chart, line_spec):
        report = equality_probe(hyperbolic_chart, line_spec, [0.2, 0.8, 1.6], -1.0)
        assert report.status == EvolutionStatus.COMPLETE
        assert len(report.verdicts) == 3
        assert all(pair_verdict.holds for pair_verdict in report.verdicts)
        assert report.max_abs_gap <= 1e-6
        assert report.curvature_deviation < 1e-8

    def test_product_strictness(self, product_chart, point_spec):
        policy = TolerancePolicy(psd_slack=1e-6)
        times = np.linspace(0.1, 2.0, 20)
        _, frame = normal_geodesic(product_chart, point_spec, 2.0 + 1e-3, 1e-3)
        evolution = evolve_hessian(frame, point_spec, output_times=times)
        assert evolution.status == EvolutionStatus.COMPLETE
        for pair in evolution.pairs:
            assert verdict(pair, bound_at(0, pair.t, 2, point_spec), policy).holds
        pair = evolution.pair_at(1.0)
        result = verdict(pair, bound_at(0, 1.0, 2, point_spec), policy)
        expected = 0.5 - np.cos(np.sqrt(2)) / np.sin(np.sqrt(2)) / np.sqrt(2)
        assert result.gap_max_eigenvalue > 0.05
        assert cmath.isclose(result.gap_max_eigenvalue, expected, abs_tol=1e-5)
        fd_pair = fd_hessian_oracle(product_chart, point_spec, frame.path.samples[1000].z)
        assert verdict(fd_pair, bound_at(0, fd_pair.t, 2, point_spec), policy).gap_max_eigenvalue > 0.05

    def test_oracle_triangle(self, cp2_chart, cp2_point_frame, point_spec):
        indices = [500, 1000, 1500]
        times = [cp2_point_frame.path.samples[index].t for index in indices]
        riccati = evolve_hessian(cp2_point_frame, point_spec, output_times=times)
        jacobi = jacobi_oracle(cp2_point_frame, point_spec, times)
        finite_difference = [
            fd_hessian_oracle(cp2_chart, point_spec, cp2_point_frame.path.samples[index].z) for index in indices
        ]
        assert len(jacobi) == 3
        assert oracle_triangle(riccati.pairs, jacobi.pairs, finite_difference) < 1e-4
        assert oracle_triangle(riccati.pairs, []) == 0

    def test_congruence_reduction(self, cp2_chart, cp2_point_frame, point_spec):
        evolution = evolve_hessian(cp2_point_frame, point_spec, output_times=[0.5, 1.0])
        for pair in evolution.pairs:
            index = int(round(pair.t / cp2_point_frame.path.step))
            curvature = cp2_chart.curvature_slice_in_frame(
                cp2_point_frame.path.samples[index].z, cp2_point_frame.frames[index]
            )
            assert congruence_reduction_check(pair, curvature, 1.0, TolerancePolicy(psd_slack=1e-6)).holds

    def test_verdict_mismatch(self, point_spec, tolerance_policy):
        pair = HessianPair(1.0, HermitianMatrix.diagonal([0.5, 1.0]), SymmetricComplexMatrix(np.zeros((2, 2))))
        assert verdict(pair, bound_at(0, 1.0, 2, point_spec), tolerance_policy).holds
        with pytest.raises(FrameMismatchException):
            verdict(pair, bound_at(0, 1.1, 2, point_spec), tolerance_policy)
        with pytest.raises(FrameMismatchException):
            verdict(pair, bound_at(0, 1.0, 3, point_spec), tolerance_policy)
        pair = HessianPair(1.0, HermitianMatrix.diagonal([0.6, 1.0]), SymmetricComplexMatrix(np.zeros((2, 2))))
        result = verdict(pair, bound_at(0, 1.0, 2, point_spec), tolerance_policy)
        assert not result.holds
        assert cmath.isclose(result.gap_min_eigenvalue, -0.1, abs_tol=1e-12)
