# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import cmath

from kahlercomp.domain.models import VolumeComparisonVerdict, VolumeBand, ScalingLawReport, VolumeReport


class TestVolumeModels:

    def test_comparison_verdict(self):
        verdict = VolumeComparisonVerdict(1, 1.0, 4.0, V=6.0, V_k1=8.0, V_k2=2.0)
        assert verdict.holds
        assert verdict.rigidity is None

        verdict = VolumeComparisonVerdict(1, 1.0, 4.0, V=8.0 * (1 + 1e-9), V_k1=8.0, V_k2=2.0)
        assert verdict.upper_equality
        assert verdict.holds
        assert verdict.rigidity.startswith("rigidity case")

        verdict = VolumeComparisonVerdict(1, 1.0, 4.0, V=1.0, V_k1=8.0, V_k2=2.0)
        assert not verdict.lower_holds
        assert verdict.upper_holds
        assert not verdict.holds
        assert verdict.rigidity is None

    def test_band(self):
        band = VolumeBand(2, 1.0, 3.0, negative_case=True)
        assert band.contains(1.0)
        assert band.contains(3.0)
        assert not band.contains(3.1)
        assert not band.contains(0.9)

    def test_reports(self):
        report = ScalingLawReport(1, [1.0, 2.0], [4.0, 2.0], [4.0, 2.002])
        assert report.formula_products == [4.0, 4.0]
        assert report.formula_spread == 0
        assert cmath.isclose(report.quadrature_spread, 0.004 / 4.002, abs_tol=1e-12)
        assert cmath.isclose(report.path_deviation, 1e-3, abs_tol=1e-12)
        assert ScalingLawReport(1, [1.0], [4.0]).quadrature_products is None

        volume = VolumeReport(1, "fubini_study(n=1,K=1)", 2.002, 2.0, 2.0, (2.0, 2.0))
        assert cmath.isclose(volume.relative_deviation, 1e-3, abs_tol=1e-12)
        assert volume.notes == []
        assert VolumeReport(3, "fubini_study(n=3,K=1)", None, 1.0, 4.0, (12.0, 12.0)).relative_deviation is None
