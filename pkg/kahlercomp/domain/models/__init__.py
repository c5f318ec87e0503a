# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from .hermitian import (  # noqa
    TolerancePolicy, HermitianMatrix, SymmetricComplexMatrix, LoewnerVerdict, hermitian_eigenvalues, loewner_leq,
    congruence
)
from .submanifold import SubmanifoldKind, SubmanifoldSpec  # noqa
from .geodesic import GeodesicStatus, GeodesicSample, GeodesicPath, ParallelFrame  # noqa
from .hessian import (  # noqa
    ComputationSource, EvolutionStatus, HessianPair, HessianEvolution, BoundFunctions, BoundMatrices,
    ComparisonVerdict, IntegrationOrderEstimate, EqualityProbeReport
)
from .riccati import (  # noqa
    CurveStatus, HermitianCurve, RiccatiInstance, ComparisonOutcome, ComparisonResult, RiccatiSuiteSummary
)
from .spectral import (  # noqa
    SpectralMethod, RadialProfile, SpectralResult, RadialShootingResult, TriangleMesh, MeshSpectralResult,
    BochnerIdentityReport, EqualityCaseReport
)
from .volume import VolumeReport, ScalingLawReport, VolumeComparisonVerdict, VolumeBand  # noqa
from .conventions import CONVENTION_LEDGER, ledger_hash  # noqa
