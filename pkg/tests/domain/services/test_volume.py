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
    ScalarCurvatureRangeException, NonIntegrableChartException, DimensionMismatchException
)
from kahlercomp.domain.models.kahler_chart import SpaceFormChart, ProductChart
from kahlercomp.domain.models.volume import RIGIDITY_MESSAGE
from kahlercomp.domain.services.volume import (
    PINNED_BASE_VOLUMES, compact_factors, volume_quadrature, flat_polydisk_volume, scalar_curvature_range,
    chern_factor, chern_number, volume_formula, base_volume, constant_scalar_volume, scaling_law_check,
    comparison_verdict, negative_case_band, volume_band_table, volume_report
)


class TestQuadrature:

    def test_einstein_sphere(self):
        assert cmath.isclose(volume_quadrature(SpaceFormChart(1, 0.5)), 4 * np.pi, rel_tol=1e-3)

    def test_projective_plane(self):
        assert cmath.isclose(volume_quadrature(SpaceFormChart(2, 1 / 3)), 18 * np.pi ** 2, rel_tol=1e-3)

    def test_flat_polydisk(self):
        chart = SpaceFormChart(1, 0.0)
        assert cmath.isclose(volume_quadrature(chart, radius=1.5), flat_polydisk_volume(1, 1.5), rel_tol=1e-9)
        assert flat_polydisk_volume(2, 1.0) == 4 * np.pi ** 2

    def test_integrand(self):
        chart = SpaceFormChart(1, 1.0)
        total = volume_quadrature(chart, integrand=lambda z: 2.0)
        assert cmath.isclose(total, 2 * volume_quadrature(chart), rel_tol=1e-9)

    def test_exceptions(self):
        with pytest.raises(DimensionMismatchException):
            volume_quadrature(SpaceFormChart(3, 1.0))
        with pytest.raises(NonIntegrableChartException) as e:
            volume_quadrature(SpaceFormChart(1, -1.0))
        assert e.value.chart_label == "complex_hyperbolic(n=1,K=-1)"

    def test_compact_factors(self, product_chart):
        assert len(compact_factors(product_chart)) == 2
        assert compact_factors(SpaceFormChart(2, 0.0)) is None
        assert compact_factors(ProductChart([SpaceFormChart(1, 1.0), SpaceFormChart(1, -1.0)])) is None


class TestChern:

    def test_chern_factor(self, cp2_chart, product_chart):
        assert cmath.isclose(chern_factor(cp2_chart), 3, abs_tol=1e-9)
        assert cmath.isclose(chern_factor(SpaceFormChart(1, 0.5)), 1, abs_tol=1e-9)
        assert cmath.isclose(chern_factor(product_chart), 2, abs_tol=1e-9)
        assert cmath.isclose(chern_factor(SpaceFormChart(2, -1.0)), -3, abs_tol=1e-9)
        lower, upper = scalar_curvature_range(cp2_chart)
        assert cmath.isclose(lower, 6, abs_tol=1e-9)
        assert cmath.isclose(upper, 6, abs_tol=1e-9)

    def test_chern_number(self, cp2_chart, product_chart):
        assert chern_number(SpaceFormChart(1, 1.0)) == 2
        assert chern_number(cp2_chart) == 9
        assert chern_number(product_chart) == 8
        with pytest.raises(NonIntegrableChartException):
            chern_number(SpaceFormChart(2, 0.0))


class TestVolumeComparison:

    def test_formula(self):
        for n, volume in PINNED_BASE_VOLUMES.items():
            assert cmath.isclose(volume_formula(n, 1.0), volume, rel_tol=1e-12)
            assert base_volume(n) == volume
        assert cmath.isclose(volume_formula(1, -2.0, chern_integral=-2), 2 * np.pi, rel_tol=1e-12)
        assert cmath.isclose(base_volume(4), (2 * np.pi) ** 4 * 5 ** 4 / 24, rel_tol=1e-12)
        with pytest.raises(ScalarCurvatureRangeException):
            volume_formula(2, 0)

    def test_constant_scalar_volume(self):
        assert cmath.isclose(constant_scalar_volume(1, 1.0), 4 * np.pi, rel_tol=1e-12)
        assert cmath.isclose(constant_scalar_volume(2, 6.0), 18 * np.pi ** 2 / 9, rel_tol=1e-12)
        with pytest.raises(ScalarCurvatureRangeException):
            constant_scalar_volume(2, -1.0)

    def test_scaling_law(self):
        report = scaling_law_check(1, [0.5, 1.0, 2.0])
        assert report.formula_spread < 1e-10
        assert report.quadrature_spread < 2e-3
        assert report.path_deviation < 2e-3
        report = scaling_law_check(3, [0.5, 1.0, 2.0, 3.0])
        assert report.formula_spread < 1e-10
        assert report.quadrature_volumes is None
        with pytest.raises(ScalarCurvatureRangeException):
            scaling_law_check(1, [1.0, 0.0], quadrature=False)

    def test_comparison_verdict(self):
        inside = comparison_verdict(1, 1.0, 4.0, 2 * np.pi)
        assert inside.holds
        assert inside.rigidity is None

        rigid = comparison_verdict(1, 1.0, 4.0, volume_quadrature(SpaceFormChart(1, 0.5)))
        assert rigid.holds
        assert rigid.upper_equality
        assert rigid.rigidity == RIGIDITY_MESSAGE

        too_small = comparison_verdict(1, 1.0, 4.0, np.pi / 2)
        assert not too_small.holds
        assert not too_small.lower_holds
        assert too_small.rigidity is None

        with pytest.raises(ScalarCurvatureRangeException) as e:
            comparison_verdict(1, 4.0, 1.0, np.pi)
        assert (e.value.k1, e.value.k2) == (4.0, 1.0)

    def test_negative_case_band(self):
        band = negative_case_band(1, 1.0, 2.0, -2)
        assert band.negative_case
        assert cmath.isclose(band.lower, 2 * np.pi, rel_tol=1e-12)
        assert cmath.isclose(band.upper, 4 * np.pi, rel_tol=1e-12)
        assert band.contains(3 * np.pi)
        assert not band.contains(5 * np.pi)
        with pytest.raises(ScalarCurvatureRangeException):
            negative_case_band(1, 2.0, 1.0, -2)

    def test_volume_band_table(self):
        table = volume_band_table(2, [1, 2])
        assert [k for k, _ in table] == [1.0, 2.0]
        assert cmath.isclose(table[0][1], 72 * np.pi ** 2, rel_tol=1e-12)
        assert cmath.isclose(table[1][1], 18 * np.pi ** 2, rel_tol=1e-12)

    def test_volume_report(self, product_chart):
        report = volume_report(SpaceFormChart(1, 1.0))
        assert cmath.isclose(report.V_formula, 2 * np.pi, rel_tol=1e-12)
        assert report.relative_deviation < 1e-6
        assert report.notes == []

        report = volume_report(product_chart)
        assert cmath.isclose(report.V_formula, 4 * np.pi ** 2, rel_tol=1e-12)
        assert report.relative_deviation < 1e-6
        assert len(report.notes) == 1

        report = volume_report(SpaceFormChart(3, 1.0))
        assert report.V_quadrature is None
        assert cmath.isclose(report.V_formula, 256 * np.pi ** 3 / 3 / 4 ** 3, rel_tol=1e-12)

        with pytest.raises(NonIntegrableChartException):
            volume_report(SpaceFormChart(2, -1.0))
