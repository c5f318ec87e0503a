# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import json
import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from kahlercomp.domain.exceptions import KahlerCompException
from kahlercomp.domain.models import (
    TolerancePolicy, HermitianMatrix, SymmetricComplexMatrix, EvolutionStatus, ComparisonOutcome, SubmanifoldSpec,
    ParallelFrame, HessianPair, ComputationSource, hermitian_eigenvalues, ledger_hash
)
from kahlercomp.domain.models.kahler_chart import KahlerChart, CurvatureSlice, SpaceFormChart, SpaceLabel
from kahlercomp.domain.ports.dtos import (
    RunConfiguration, HessianConfiguration, Command, EigenMode, OracleType, VerdictRecord, EqualityRecord,
    HessianSection, ScalarCheckRecord, RiccatiSection, RadialRecord, MeshRecord, BochnerRecord, EqualityCaseRecord,
    EigenSection, VolumeSection, VerificationReport, Table, MeshGeometry
)
from kahlercomp.domain.services.factories import ChartFactory
from kahlercomp.domain.services.geodesy import normal_geodesic
from kahlercomp.domain.services.hessian_compare import (
    CurvatureInterpolant, evolve_hessian, estimate_integration_order, bound_at, verdict, fd_hessian_oracle,
    jacobi_oracle, oracle_triangle, congruence_reduction_check, equality_probe
)
from kahlercomp.domain.services.hessian_compare.riccati_evolution import MINIMUM_ORDER
from kahlercomp.domain.services.modelspace import bisectional_lower_bound_estimate
from kahlercomp.domain.services.riccati_lemma import run_suite, scalar_closed_form_check
from kahlercomp.domain.services.spectral import (
    radial_dirichlet_lambda1, mesh_lambda1_cp1, EIGENFUNCTION_LIBRARY, bochner_identity_check, equality_case_checks
)
from kahlercomp.domain.services.volume import volume_report, scaling_law_check, comparison_verdict, volume_band_table
from .run_config_loader import chart_from_configuration, submanifold_from_configuration

logger = logging.getLogger(__name__)

# Largest pairwise deviation between the Riccati, finite difference and Jacobi Hessians
ORACLE_TOLERANCE = 1e-4
RADIAL_TOLERANCE = 1e-6
COMPLEMENTARITY_TOLERANCE = 1e-9
# Relative error of the mesh eigenvalue
MESH_TOLERANCE = 0.02
MINIMUM_MESH_ORDER = 1.5
BOCHNER_TOLERANCE = 1e-3
EQUALITY_CASE_TOLERANCE = 1e-4
SCALAR_TOLERANCE = 1e-7
VOLUME_TOLERANCE = 1e-3
SCALING_FORMULA_TOLERANCE = 1e-10
SCALING_QUADRATURE_TOLERANCE = 2e-3
BISECTIONAL_TOLERANCE = 1e-6
# Interval and step of the integration order check
ORDER_CHECK_LENGTH = 0.5
ORDER_CHECK_STEP = 0.02
MAXIMUM_FRAME_ROWS = 200
BOCHNER_FUNCTIONS = ("x1", "x3", "zonal_quadratic")
# Functions probed for the equality case, with the expected outcome
EQUALITY_CASES = (("x1", True), ("negative_control", False))

HESSIAN_CURVES_FILE = "hessian_curves"
GEODESIC_FRAMES_FILE = "geodesic_frames"
VOLUME_BANDS_FILE = "volume_bands.csv"


class JobFamily(Enum):
    """
    Independent jobs a run is split into.
    """
    HESSIAN = "hessian"
    RICCATI = "riccati"
    RADIAL = "radial"
    MESH = "mesh"
    BOCHNER = "bochner"
    VOLUME = "volume"


class JobOutcome:
    """
    Result of a job: its report section, the failing verdicts, the tables to export and a printable summary.
    """

    def __init__(
        self, family: JobFamily, index: int, section, failures: List[str] = None, tables: Dict[str, Table] = None,
        mesh: Optional[MeshGeometry] = None, lines: List[str] = None
    ):
        self.family = family
        self.index = index
        self.section = section
        self.failures = failures if failures is not None else []
        self.tables = tables if tables is not None else {}
        self.mesh = mesh
        self.lines = lines if lines is not None else []

    @property
    def key(self) -> Tuple[str, int]:
        return self.family.value, self.index

    def __repr__(self):
        return f"JobOutcome(family={self.family.value}, index={self.index}, failures={len(self.failures)})"


def _finite(value: Optional[float]) -> Optional[float]:
    if value is None or not np.isfinite(value):
        return None
    return float(value)


def _frame_table(frame: ParallelFrame) -> Table:
    """
    Points and parallel frame along a path, with at most MAXIMUM_FRAME_ROWS rows.
    """
    n = frame.path.chart.complex_dim
    columns = ["t"]
    for i in range(1, n + 1):
        columns += [f"re_z{i}", f"im_z{i}"]
    for a in range(1, n + 1):
        for i in range(1, n + 1):
            columns += [f"re_e{a}_{i}", f"im_e{a}_{i}"]
    stride = max(1, int(np.ceil(len(frame.path) / MAXIMUM_FRAME_ROWS)))
    rows = []
    for index in range(0, len(frame.path), stride):
        sample = frame.path.samples[index]
        values = np.concatenate([sample.z.reshape(-1), np.asarray(frame.frames[index]).reshape(-1)])
        row = [float(sample.t)]
        for value in values:
            row += [float(value.real), float(value.imag)]
        rows.append(row)
    return Table(columns=columns, rows=rows)


def _sample_points(chart: KahlerChart, nb_points: int, rng: np.random.Generator) -> List[np.ndarray]:
    """
    Origin and random points of the chart domain. The spread is halved after every point falling outside the domain.
    """
    n = chart.complex_dim
    points = [np.zeros(n, dtype=complex)]
    scale = 0.5 / np.sqrt(n)
    while len(points) < nb_points:
        z = scale * (rng.standard_normal(n) + 1j * rng.standard_normal(n))
        if chart.in_domain(z):
            points.append(z)
        else:
            scale /= 2
    return points


class VerificationRunner:
    """
    Service running the verification families of a run configuration, job by job, and assembling their report.
    """

    def __init__(self, configuration: RunConfiguration):
        """
        Initialize the runner.

        :param configuration: Checked run configuration.
        """
        self.configuration = configuration

    def radial_pairs(self) -> List[Tuple[int, int]]:
        """
        Pairs (n, s) of the radial problem: the configured one and its complement (n, n - 1 - s).
        """
        eigen = self.configuration.eigen
        return sorted({(eigen.n, eigen.s), (eigen.n, eigen.n - 1 - eigen.s)})

    def jobs(self) -> List[Tuple[JobFamily, int]]:
        """
        Independent jobs of the run, in the order of the report.
        """
        configuration = self.configuration
        jobs = []
        if configuration.runs(Command.HESSIAN):
            jobs += [(JobFamily.HESSIAN, index) for index in range(len(configuration.hessian))]
        if configuration.runs(Command.RICCATI):
            jobs.append((JobFamily.RICCATI, 0))
        if configuration.runs(Command.EIGEN):
            mode = configuration.eigen.mode
            if mode in (EigenMode.RADIAL, EigenMode.ALL):
                jobs += [(JobFamily.RADIAL, index) for index in range(len(self.radial_pairs()))]
            if mode in (EigenMode.MESH, EigenMode.ALL):
                jobs.append((JobFamily.MESH, 0))
            if mode in (EigenMode.BOCHNER, EigenMode.ALL):
                jobs.append((JobFamily.BOCHNER, 0))
        if configuration.runs(Command.VOLUME):
            jobs.append((JobFamily.VOLUME, 0))
        return jobs

    def run_job(self, family: JobFamily, index: int) -> JobOutcome:
        """
        Run a job.

        :param family: Family of the job.
        :param index: Index of the job in its family.
        :return: The outcome of the job.
        """
        logger.info(f"Starting {family.value} job {index}")
        runners = {
            JobFamily.HESSIAN: self.run_hessian,
            JobFamily.RICCATI: self.run_riccati,
            JobFamily.RADIAL: self.run_radial,
            JobFamily.MESH: self.run_mesh,
            JobFamily.BOCHNER: self.run_bochner,
            JobFamily.VOLUME: self.run_volume
        }
        outcome = runners[family](index)
        logger.info(f"Finished {family.value} job {index} with {len(outcome.failures)} failure(s)")
        return outcome

    def run(self) -> List[JobOutcome]:
        """
        Run every job in the current process.
        """
        return [self.run_job(family, index) for family, index in self.jobs()]

    def hessian_tolerance(self, configuration: HessianConfiguration) -> TolerancePolicy:
        tolerance = self.configuration.tolerance
        if tolerance.psd_slack is None:
            return TolerancePolicy.for_step(configuration.step, tolerance.abs_tol, tolerance.rel_tol)
        return TolerancePolicy(tolerance.abs_tol, tolerance.rel_tol, tolerance.psd_slack)

    @staticmethod
    def _oracle_indices(times: np.ndarray, configuration: HessianConfiguration) -> List[int]:
        """
        Path samples closest to oracle_points radii spread strictly inside the grid.
        """
        targets = np.linspace(configuration.r_min, configuration.r_max, configuration.oracle_points + 2)[1:-1]
        return sorted({int(np.argmin(np.abs(times - target))) for target in targets})

    def _oracle_deviation(
        self, chart: KahlerChart, spec: SubmanifoldSpec, frame: ParallelFrame, configuration: HessianConfiguration,
        warnings: List[str]
    ) -> Tuple[Optional[float], List[str], List[Tuple[ComputationSource, List[HessianPair]]]]:
        """
        Compare the Riccati evolution with the configured oracles at a few path samples.

        :return: The largest pairwise deviation, None without oracle, the sources compared and the pairs of each oracle.
        """
        indices = self._oracle_indices(frame.path.times, configuration)
        times = frame.path.times[indices].tolist()
        reference = evolve_hessian(frame, spec, eps=configuration.eps, step=configuration.step, output_times=times)
        others = []
        sources = [reference.source.value]
        oracle_pairs = []
        if OracleType.JACOBI in configuration.oracles:
            jacobi = jacobi_oracle(frame, spec, times)
            warnings += jacobi.warnings
            others.append(jacobi.pairs)
            sources.append(jacobi.source.value)
            oracle_pairs.append((jacobi.source, jacobi.pairs))
        if OracleType.FINITE_DIFFERENCE in configuration.oracles:
            try:
                fd_pairs = [fd_hessian_oracle(chart, spec, frame.path.samples[index].z) for index in indices]
                others.append(fd_pairs)
                sources.append(ComputationSource.FINITE_DIFFERENCE.value)
                oracle_pairs.append((ComputationSource.FINITE_DIFFERENCE, fd_pairs))
            except KahlerCompException as e:
                message = f"Finite difference oracle skipped: {e}"
                logger.warning(message)
                warnings.append(message)
        if len(others) == 0:
            return None, sources, oracle_pairs
        return oracle_triangle(reference.pairs, *others), sources, oracle_pairs

    def run_hessian(self, index: int) -> JobOutcome:
        """
        Compare the Hessian of the distance with its bound along the first normal geodesic, with the oracles, the
        integration order, the congruence reduction, the bisectional curvature hypothesis and, on a model space of the
        bound curvature, the equality probe.

        :param index: Index of the comparison in the configuration.
        :return: The outcome.
        """
        configuration = self.configuration.hessian[index]
        chart = chart_from_configuration(configuration.chart)
        spec = submanifold_from_configuration(configuration.submanifold)
        n = chart.complex_dim
        K = configuration.bound_curvature
        tolerance = self.hessian_tolerance(configuration)
        radii = configuration.radii
        _, frame = normal_geodesic(chart, spec, radii[-1] + configuration.step, configuration.step)
        evolution = evolve_hessian(
            frame, spec, eps=configuration.eps, step=configuration.step, output_times=radii
        )
        warnings = list(evolution.warnings)
        failures = []
        label = f"hessian[{index}] {chart.name} {spec}"

        curvature = CurvatureInterpolant(frame)
        columns = ["t", "F", "G", "H"] + [f"computed_{a}{a}" for a in range(1, n + 1)]
        columns += [f"gap_eigenvalue_{a}" for a in range(1, n + 1)]
        curves = Table(columns=columns)
        records = []
        congruence_margin = np.inf
        for pair in evolution.pairs:
            bound = bound_at(K, pair.t, n, spec)
            pair_verdict = verdict(pair, bound, tolerance)
            records.append(VerdictRecord(
                space=chart.name,
                K_bound=K,
                n=n,
                p=spec.p,
                t=pair.t,
                source=pair_verdict.source.value,
                gap_min_eigenvalue=pair_verdict.gap_min_eigenvalue,
                holds=pair_verdict.holds
            ))
            gaps = hermitian_eigenvalues(bound.bound_mixed - pair.mixed)
            diagonal = np.real(np.diag(pair.mixed.entries))
            curves.rows.append([pair.t, bound.F, bound.G, bound.H] + diagonal.tolist() + gaps.tolist())
            R_mixed, R_holo = curvature(pair.t)
            curvature_slice = CurvatureSlice(
                R_mixed=HermitianMatrix(R_mixed, max_asymmetry=chart.asymmetry_tolerance),
                R_holo=SymmetricComplexMatrix(R_holo, max_asymmetry=chart.asymmetry_tolerance)
            )
            reduction = congruence_reduction_check(pair, curvature_slice, K, tolerance)
            congruence_margin = min(congruence_margin, reduction.min_eigenvalue_of_gap)

        failing = [record for record in records if not record.holds]
        if failing:
            worst = min(failing, key=lambda record: record.gap_min_eigenvalue)
            failures.append(
                f"{label}: bound fails at {len(failing)} radii, worst gap {worst.gap_min_eigenvalue:.3e} at "
                f"t={worst.t:.6f}"
            )
        if evolution.status != EvolutionStatus.COMPLETE:
            failures.append(f"{label}: evolution stopped with status {evolution.status.value}")
        if congruence_margin < -tolerance.psd_slack:
            warnings.append(f"Congruence reduction exceeds its model by {-congruence_margin:.3e}")

        oracle_deviation, oracle_sources, oracle_pairs = self._oracle_deviation(
            chart, spec, frame, configuration, warnings
        )
        if oracle_deviation is not None and oracle_deviation > ORACLE_TOLERANCE:
            failures.append(f"{label}: oracle deviation {oracle_deviation:.3e} above {ORACLE_TOLERANCE:g}")
        for source, pairs in oracle_pairs:
            for pair in pairs:
                # Oracle Hessians are only trusted up to the oracle tolerance
                oracle_tolerance = TolerancePolicy(
                    tolerance.abs_tol, tolerance.rel_tol,
                    tolerance.psd_slack + ORACLE_TOLERANCE * max(1.0, pair.mixed.norm())
                )
                pair_verdict = verdict(pair, bound_at(K, pair.t, n, spec), oracle_tolerance, source)
                records.append(VerdictRecord(
                    space=chart.name,
                    K_bound=K,
                    n=n,
                    p=spec.p,
                    t=pair.t,
                    source=pair_verdict.source.value,
                    gap_min_eigenvalue=pair_verdict.gap_min_eigenvalue,
                    holds=pair_verdict.holds
                ))
                if not pair_verdict.holds:
                    failures.append(
                        f"{label}: bound fails for the {source.value} oracle at t={pair.t:.6f}, gap "
                        f"{pair_verdict.gap_min_eigenvalue:.3e}"
                    )

        t_start = radii[0]
        t_end = min(radii[-1], t_start + ORDER_CHECK_LENGTH)
        order = estimate_integration_order(frame, spec, t_start, t_end, ORDER_CHECK_STEP, eps=configuration.eps)
        if order.order is not None and order.order < MINIMUM_ORDER:
            warnings.append(f"Observed integration order {order.order:.2f} below {MINIMUM_ORDER}")

        bisectional_min_ratio = None
        if configuration.bisectional_points > 0:
            rng = np.random.default_rng([self.configuration.suite_seed, index])
            estimate = bisectional_lower_bound_estimate(
                chart, _sample_points(chart, configuration.bisectional_points, rng),
                configuration.bisectional_samples, self.configuration.suite_seed
            )
            bisectional_min_ratio = estimate.min_ratio
            if estimate.min_ratio < K - BISECTIONAL_TOLERANCE * max(1.0, abs(K)):
                message = f"Sampled bisectional curvature {estimate.min_ratio:.6g} below K_bound={K:g}"
                logger.warning(message)
                warnings.append(message)

        equality = None
        if isinstance(chart, SpaceFormChart) and abs(chart.K - K) <= 1e-12 * max(1.0, abs(K)):
            probe = equality_probe(chart, spec, radii, K, eps=configuration.eps, step=configuration.step)
            equality = EqualityRecord(
                max_abs_gap=probe.max_abs_gap,
                holo_deviation=probe.holo_deviation,
                tangent_holo_norm=probe.tangent_holo_norm,
                curvature_deviation=probe.curvature_deviation,
                equality_holds=probe.equality_holds,
                curvature_matches=probe.curvature_matches
            )
            if not probe.equality_holds or not probe.curvature_matches:
                failures.append(
                    f"{label}: equality case not realized, gap {probe.max_abs_gap:.3e}, holo deviation "
                    f"{probe.holo_deviation:.3e}, curvature deviation {probe.curvature_deviation:.3e}"
                )

        section = HessianSection(
            index=index,
            space=chart.name,
            submanifold=str(spec),
            K_bound=K,
            n=n,
            p=spec.p,
            status=evolution.status.value,
            verdicts=records,
            holds=len(failures) == 0,
            min_gap=min(
                (record.gap_min_eigenvalue for record in records if record.source == evolution.source.value),
                default=None
            ),
            oracle_deviation=oracle_deviation,
            oracle_sources=oracle_sources,
            integration_order=order.order,
            congruence_margin=_finite(congruence_margin),
            bisectional_min_ratio=bisectional_min_ratio,
            equality=equality,
            warnings=warnings
        )
        lines = [
            f"HESSIAN {index}: {chart.name}, {spec}, K_bound={K:g}",
            f"\t* {sum(record.holds for record in records)}/{len(records)} verdicts hold, "
            f"smallest gap {section.min_gap}",
            f"\t* oracle deviation ({', '.join(oracle_sources)}): {oracle_deviation}",
            f"\t* observed integration order: {order.order}"
        ]
        if equality is not None:
            lines.append(f"\t* equality case: {equality.equality_holds} (gap {equality.max_abs_gap:.3e})")
        lines += [f"\t* WARNING: {warning}" for warning in warnings]
        tables = {HESSIAN_CURVES_FILE: curves, GEODESIC_FRAMES_FILE: _frame_table(frame)}
        return JobOutcome(JobFamily.HESSIAN, index, section, failures, tables, lines=lines)

    def run_riccati(self, index: int = 0) -> JobOutcome:
        """
        Run the randomized suite of the abstract Riccati comparison, and the scalar closed form checks.
        """
        configuration = self.configuration.riccati
        summary = run_suite(
            configuration.instances, self.configuration.suite_seed, T=configuration.T, step=configuration.step,
            t0=configuration.t0, tolerance=TolerancePolicy(psd_slack=configuration.psd_slack),
            max_dim=configuration.dim
        )
        scalar_checks = []
        for R in configuration.scalar_values:
            T = configuration.T if R >= 0 else min(configuration.T, 0.9 * np.pi / np.sqrt(-R))
            scalar_checks.append(ScalarCheckRecord(
                R=R, relative_deviation=scalar_closed_form_check(R, T=T, step=configuration.step, t0=configuration.t0)
            ))

        failures = []
        failing_instances = [
            result.index for result in summary.results if result.outcome == ComparisonOutcome.VIOLATED
        ]
        if failing_instances:
            failures.append(
                f"riccati: {summary.failures} violation(s), worst margin {summary.worst_margin:.3e}, instances "
                f"{failing_instances}"
            )
        for check in scalar_checks:
            if not check.relative_deviation <= SCALAR_TOLERANCE:
                failures.append(f"riccati: scalar closed form for R={check.R:g} off by {check.relative_deviation:.3e}")

        section = RiccatiSection(
            suite_seed=summary.suite_seed,
            instances=summary.instances,
            failures=summary.failures,
            hypothesis_violations=summary.hypothesis_violations,
            worst_margin=_finite(summary.worst_margin),
            failing_instances=failing_instances,
            scalar_checks=scalar_checks,
            holds=len(failures) == 0
        )
        lines = [
            f"RICCATI: {summary.instances} instances, seed {summary.suite_seed}",
            f"\t* {summary.failures} violation(s), {summary.hypothesis_violations} hypothesis violation(s), "
            f"worst margin {section.worst_margin}",
        ]
        lines += [
            f"\t* scalar R={check.R:g}: relative deviation {check.relative_deviation:.3e}" for check in scalar_checks
        ]
        return JobOutcome(JobFamily.RICCATI, index, section, failures, lines=lines)

    def run_radial(self, index: int) -> JobOutcome:
        """
        Compute the first Dirichlet eigenvalue of the ball around a subspace, for one of the radial pairs. Only the
        configured pair uses the configured radius.
        """
        eigen = self.configuration.eigen
        n, s = self.radial_pairs()[index]
        r0 = eigen.r0 if s == eigen.s else None
        result = radial_dirichlet_lambda1(n, s, r0=r0, shooting_tol=eigen.shooting_tol, K=eigen.K)
        discrepancy = result.critical_discrepancy
        holds = discrepancy is None or abs(discrepancy) <= RADIAL_TOLERANCE
        failures = []
        if not holds:
            failures.append(
                f"radial (n={n}, s={s}): eigenvalue {result.eigenvalue:.9f} at the critical radius, expected "
                f"{result.expected_eigenvalue:g}"
            )
        section = RadialRecord(
            n=n,
            s=s,
            r0=result.r0,
            eigenvalue=result.eigenvalue,
            residual=result.residual,
            iterations=result.iterations,
            critical_radius=result.critical_radius,
            expected_eigenvalue=result.expected_eigenvalue,
            critical_discrepancy=discrepancy,
            holds=holds
        )
        lines = [f"RADIAL (n={n}, s={s}): lambda_1 = {result.eigenvalue:.9f} at r0 = {result.r0:.9f}"]
        return JobOutcome(JobFamily.RADIAL, index, section, failures, lines=lines)

    def run_mesh(self, index: int = 0) -> JobOutcome:
        """
        Compute the first eigenvalue of CP^1 on a sphere mesh.
        """
        eigen = self.configuration.eigen
        result = mesh_lambda1_cp1(eigen.resolution, eigen.K)
        expected = 2 * eigen.K
        relative_error = abs(result.eigenvalue - expected) / expected
        order = result.convergence_order
        holds = relative_error <= MESH_TOLERANCE and (order is None or order >= MINIMUM_MESH_ORDER)
        failures = []
        if not holds:
            failures.append(f"mesh: eigenvalue {result.eigenvalue:.6f} (expected {expected:g}), order {order}")
        section = MeshRecord(
            nb_vertices=result.mesh.nb_vertices,
            eigenvalue=result.eigenvalue,
            relative_error=relative_error,
            level_eigenvalues=result.level_eigenvalues,
            level_vertices=result.level_vertices,
            convergence_order=order,
            holds=holds
        )
        mesh = MeshGeometry(vertices=result.mesh.vertices.tolist(), faces=result.mesh.faces.tolist())
        lines = [
            f"MESH: lambda_1 = {result.eigenvalue:.6f} on {result.mesh.nb_vertices} vertices, observed order {order}"
        ]
        return JobOutcome(JobFamily.MESH, index, section, failures, mesh=mesh, lines=lines)

    def run_bochner(self, index: int = 0) -> JobOutcome:
        """
        Check the Bochner identity on eigenfunctions of CP^1, and the equality case quantities on a first
        eigenfunction and on a negative control.
        """
        chart = ChartFactory.get_chart(SpaceLabel.FUBINI_STUDY, 1, self.configuration.eigen.K)
        failures = []
        records = []
        for name in BOCHNER_FUNCTIONS:
            report = bochner_identity_check(EIGENFUNCTION_LIBRARY[name], chart=chart)
            holds = report.residual < BOCHNER_TOLERANCE and report.eigen_residual < BOCHNER_TOLERANCE
            if not holds:
                failures.append(f"bochner: identity residual {report.residual:.3e} for {name}")
            records.append(BochnerRecord(
                function=name,
                eigenvalue=report.eigenvalue,
                gradient_energy=report.gradient_energy,
                hessian_energy=report.hessian_energy,
                ricci_energy=report.ricci_energy,
                residual=report.residual,
                eigen_residual=report.eigen_residual,
                holds=holds
            ))
        equality_cases = []
        for name, expected in EQUALITY_CASES:
            report = equality_case_checks(EIGENFUNCTION_LIBRARY[name], chart=chart)
            observed = report.holds(EQUALITY_CASE_TOLERANCE)
            if observed != expected:
                failures.append(
                    f"bochner: equality case for {name} is {observed}, expected {expected} "
                    f"(u_ab {report.uab_norm:.3e}, phi variation {report.phi_variation:.3e})"
                )
            equality_cases.append(EqualityCaseRecord(
                function=name,
                uab_norm=report.uab_norm,
                phi_variation=report.phi_variation,
                equality_observed=observed,
                equality_expected=expected
            ))
        section = EigenSection(bochner=records, equality_cases=equality_cases, holds=len(failures) == 0)
        lines = ["BOCHNER:"] + [f"\t* {record.function}: residual {record.residual:.3e}" for record in records]
        lines += [
            f"\t* equality case {record.function}: {record.equality_observed}" for record in equality_cases
        ]
        return JobOutcome(JobFamily.BOCHNER, index, section, failures, lines=lines)

    def run_volume(self, index: int = 0) -> JobOutcome:
        """
        Compute the volume of CP^n on both paths, check the scaling law and the two-sided volume comparison, and
        tabulate the volume band.
        """
        configuration = self.configuration.volume
        n = configuration.n
        chart = ChartFactory.get_chart(SpaceLabel.FUBINI_STUDY, n, configuration.K)
        report = volume_report(chart, seed=self.configuration.suite_seed)
        scaling = scaling_law_check(n, configuration.lambda_values, quadrature=n <= 2)
        V = report.V_quadrature if report.V_quadrature is not None else report.V_formula
        comparison = comparison_verdict(n, configuration.k1, configuration.k2, V)
        k_values = np.linspace(configuration.k1, configuration.k2, configuration.band_points).tolist()
        band = Table(columns=["k", "V_k"], rows=[[k, V_k] for k, V_k in volume_band_table(n, k_values)])

        failures = []
        deviation = report.relative_deviation
        if deviation is not None and deviation > VOLUME_TOLERANCE:
            failures.append(f"volume: quadrature and formula paths differ by {deviation:.3e}")
        if scaling.formula_spread > SCALING_FORMULA_TOLERANCE:
            failures.append(f"volume: scaling law spread {scaling.formula_spread:.3e} on the formula path")
        quadrature_spread = scaling.quadrature_spread
        if quadrature_spread is not None and quadrature_spread > SCALING_QUADRATURE_TOLERANCE:
            failures.append(f"volume: scaling law spread {quadrature_spread:.3e} on the quadrature path")
        if not comparison.holds:
            failures.append(
                f"volume: V={V:.9g} outside [{comparison.V_k2:.9g}, {comparison.V_k1:.9g}] for "
                f"k1={configuration.k1:g}, k2={configuration.k2:g}"
            )
        scalar_min, scalar_max = report.scalar_range
        section = VolumeSection(
            n=n,
            space=chart.name,
            V_quadrature=report.V_quadrature,
            V_formula=report.V_formula,
            relative_deviation=deviation,
            chern_factor=report.chern_factor,
            scalar_min=scalar_min,
            scalar_max=scalar_max,
            lambda_values=list(configuration.lambda_values),
            formula_spread=scaling.formula_spread,
            quadrature_spread=quadrature_spread,
            k1=configuration.k1,
            k2=configuration.k2,
            V_k1=comparison.V_k1,
            V_k2=comparison.V_k2,
            lower_holds=comparison.lower_holds,
            upper_holds=comparison.upper_holds,
            rigidity=comparison.rigidity,
            notes=report.notes,
            holds=len(failures) == 0
        )
        lines = [
            f"VOLUME: {chart.name}, V = {V:.9g} (formula {report.V_formula:.9g})",
            f"\t* band [{comparison.V_k2:.9g}, {comparison.V_k1:.9g}] holds: {comparison.holds}"
        ]
        if comparison.rigidity is not None:
            lines.append(f"\t* {comparison.rigidity}")
        return JobOutcome(JobFamily.VOLUME, index, section, failures, {VOLUME_BANDS_FILE: band}, lines=lines)

    def _eigen_section(self, outcomes: List[JobOutcome]) -> Optional[EigenSection]:
        radial = [outcome.section for outcome in outcomes if outcome.family == JobFamily.RADIAL]
        meshes = [outcome.section for outcome in outcomes if outcome.family == JobFamily.MESH]
        bochner = [outcome.section for outcome in outcomes if outcome.family == JobFamily.BOCHNER]
        if not (radial or meshes or bochner):
            return None
        complementarity = None
        if radial:
            K = self.configuration.eigen.K
            radii = [record.critical_radius for record in radial]
            if len(radii) == 1:
                radii = radii * 2
            complementarity = abs(sum(radii) - np.pi / np.sqrt(2 * K))
        holds = (
            all(record.holds for record in radial + meshes + bochner)
            and (complementarity is None or complementarity <= COMPLEMENTARITY_TOLERANCE)
        )
        return EigenSection(
            radial=radial,
            complementarity=complementarity,
            mesh=meshes[0] if meshes else None,
            bochner=bochner[0].bochner if bochner else [],
            equality_cases=bochner[0].equality_cases if bochner else [],
            holds=holds
        )

    def assemble(
        self, outcomes: List[JobOutcome]
    ) -> Tuple[VerificationReport, Dict[str, Table], Optional[MeshGeometry]]:
        """
        Assemble the outcomes of the jobs into the report of the run. Outcomes are sorted by job so that the report
        does not depend on the order in which they were produced.

        :param outcomes: Outcomes of the jobs.
        :return: The report, the tables by file name and the mesh of the eigenvalue checks if any.
        """
        order = {family: rank for rank, family in enumerate(JobFamily)}
        outcomes = sorted(outcomes, key=lambda outcome: (order[outcome.family], outcome.index))
        failures = [failure for outcome in outcomes for failure in outcome.failures]
        tables = {}
        mesh = None
        hessian = [outcome for outcome in outcomes if outcome.family == JobFamily.HESSIAN]
        for outcome in outcomes:
            for name, table in outcome.tables.items():
                if outcome.family == JobFamily.HESSIAN:
                    name = f"{name}.csv" if len(hessian) == 1 else f"{name}_{outcome.index}.csv"
                tables[name] = table
            if outcome.mesh is not None:
                mesh = outcome.mesh

        eigen = self._eigen_section(outcomes)
        if eigen is not None and eigen.complementarity is not None \
                and eigen.complementarity > COMPLEMENTARITY_TOLERANCE:
            failures.append(f"radial: critical radii are not complementary ({eigen.complementarity:.3e})")
        riccati = [outcome.section for outcome in outcomes if outcome.family == JobFamily.RICCATI]
        volume = [outcome.section for outcome in outcomes if outcome.family == JobFamily.VOLUME]
        report = VerificationReport(
            convention_ledger_hash=ledger_hash(),
            config=self.resolved_configuration(),
            hessian=[outcome.section for outcome in hessian],
            riccati=riccati[0] if riccati else None,
            eigen=eigen,
            volume=volume[0] if volume else None,
            failures=failures
        )
        return report, tables, mesh

    def resolved_configuration(self) -> Dict:
        """
        Configuration of the run as JSON data. The output directory and the number of processes do not change the
        results and are left out so that reports of identical runs are identical.
        """
        return json.loads(self.configuration.json(exclude={"output_dir", "cores", "verbose", "rewrite"}))
