# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import numpy as np

from kahlercomp.domain.exceptions import (
    KahlerCompExceptionCollector, ModelDiameterException, SubspaceDimensionException, ScalarCurvatureRangeException
)
from kahlercomp.domain.models import SubmanifoldKind, SubmanifoldSpec
from kahlercomp.domain.models.kahler_chart import KahlerChart, SpaceLabel, ProductChart
from kahlercomp.domain.ports.dtos import (
    RunConfiguration, ChartConfiguration, ChartLabel, SubmanifoldConfiguration, HessianConfiguration,
    EigenConfiguration, VolumeConfiguration, Command
)
from kahlercomp.domain.ports.run_config import RunConfigParser
from kahlercomp.domain.services.factories import ChartFactory


def chart_from_configuration(configuration: ChartConfiguration) -> KahlerChart:
    """
    Build the chart described by a configuration.

    :param configuration: Chart configuration.
    :return: The chart.
    """
    factors = None
    if configuration.label == ChartLabel.PRODUCT:
        factors = [(factor.n, factor.K) for factor in configuration.factors]
    return ChartFactory.get_chart(SpaceLabel(configuration.label.value), configuration.n, configuration.K, factors)


def submanifold_from_configuration(configuration: SubmanifoldConfiguration) -> SubmanifoldSpec:
    return SubmanifoldSpec(SubmanifoldKind(configuration.kind.value), configuration.tangent_indices)


def _diameter(chart: KahlerChart) -> float:
    """
    Length beyond which a normal geodesic of the chart may stop minimizing, infinite without positive curvature.
    """
    if isinstance(chart, ProductChart):
        constants = [factor.curvature_constant for factor in chart.factors]
    else:
        constants = [chart.curvature_constant]
    positive = [K for K in constants if K is not None and K > 0]
    if len(positive) == 0:
        return np.inf
    return float(np.pi / np.sqrt(2 * max(positive)))


class RunConfigLoader:
    """
    Service to load a run configuration based on a parser, and check it against the chart domains and the
    preconditions of the comparisons before any computation.
    """

    def __init__(self, run_config_parser: RunConfigParser):
        """
        Initialize the loader.

        :param run_config_parser: Parser in charge of reading the run configuration.
        """
        self.run_config_parser = run_config_parser

    def load_run_configuration(self) -> RunConfiguration:
        """
        Load and check the run configuration.

        :return: The run configuration.
        :raise KahlerCompExceptionList if the configuration cannot be parsed or breaks a precondition.
        """
        configuration = self.run_config_parser.parse_run_configuration()
        self.check_run_configuration(configuration)
        return configuration

    @staticmethod
    def check_hessian(configuration: HessianConfiguration):
        """
        Check a Hessian comparison: the chart must be a model space, the submanifold must leave a normal direction,
        and the grid must stay within the comparison radius sqrt(2K) r < pi and the diameter of the chart.

        :param configuration: Configuration of the comparison.
        :raise ChartLabelException if the chart does not describe a model space.
        :raise SubspaceDimensionException if the submanifold does not fit in the chart.
        :raise ModelDiameterException if the grid goes beyond the comparison radius or the chart diameter.
        """
        chart = chart_from_configuration(configuration.chart)
        spec = submanifold_from_configuration(configuration.submanifold)
        spec.check_dimension(chart.complex_dim)
        K = configuration.bound_curvature
        if K > 0 and not np.sqrt(2 * K) * configuration.r_max < np.pi:
            raise ModelDiameterException(K, configuration.r_max)
        if not configuration.r_max < _diameter(chart):
            raise ModelDiameterException(chart.curvature_constant or K, configuration.r_max)

    @staticmethod
    def check_eigen(configuration: EigenConfiguration):
        """
        Check the radial problem: 0 <= s <= n - 1 and 0 < r0 < pi / sqrt(2K).

        :raise SubspaceDimensionException if s is out of range.
        :raise ModelDiameterException if r0 is beyond the model diameter.
        """
        if not configuration.s <= configuration.n - 1:
            raise SubspaceDimensionException(configuration.s, configuration.n)
        if configuration.r0 is not None and not np.sqrt(2 * configuration.K) * configuration.r0 < np.pi:
            raise ModelDiameterException(configuration.K, configuration.r0)

    @staticmethod
    def check_volume(configuration: VolumeConfiguration):
        """
        :raise ScalarCurvatureRangeException if k1 > k2.
        """
        if configuration.k1 > configuration.k2:
            raise ScalarCurvatureRangeException(configuration.k1, configuration.k2)

    @classmethod
    def check_run_configuration(cls, configuration: RunConfiguration):
        """
        Check the sections of the families that are run. Every failing check is reported.

        :param configuration: Run configuration.
        :raise KahlerCompExceptionList if some checks fail.
        """
        collector = KahlerCompExceptionCollector()
        if configuration.runs(Command.HESSIAN):
            for hessian in configuration.hessian:
                with collector:
                    cls.check_hessian(hessian)
        if configuration.runs(Command.EIGEN):
            with collector:
                cls.check_eigen(configuration.eigen)
        if configuration.runs(Command.VOLUME):
            with collector:
                cls.check_volume(configuration.volume)
        collector.raise_for_exception()
