# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Conventions shared by all the computations, embedded in every report through the hash of their text.
"""

import hashlib

CONVENTION_LEDGER = """\
metric: g[i, j] = d^2 potential / dz_i dzbar_j, Riemannian norm |v| = sqrt(2 v g conj(v)) for a (1,0) vector v
space forms: potential log(1 + K |z|^2) / K, holomorphic sectional curvature 2K, diameter pi / sqrt(2K) for K > 0
curvature: R[i, j, k, l] = -d_k dbar_l g[i, j] + g^{q p} d_k g[i, q] dbar_l g[p, j]
space form identity: R[i, j, k, l] = K (g[i, j] g[k, l] + g[i, l] g[k, j])
ricci: Ric[a, b] = g^{c d} R[a, b, c, d], equal to (n + 1) K g on a space form
scalar curvature: R = g^{b a} Ric[a, b], equal to n (n + 1) K on a space form
radial frame: e_1 = sqrt(2) v for the unit velocity v, so that r_1 = 1 / sqrt(2) and r_a r_abar = 1 / 2
hessian seed: mixed diag(1/(2 eps), (1/eps) I, 0_p), holo diag(-1/(2 eps), 0), tangent block corrected by the curvature
verdicts: Loewner order on the mixed Hessian only, holomorphic Hessian monitored
tangent bound for K < 0: H = +sqrt(-K/2) tanh(sqrt(-K/2) r)
riccati harness: X' = R - X^2, R = +k gives sqrt(k) coth(sqrt(k) t), R = -k gives sqrt(k) cot(sqrt(k) t)
laplacian: Delta u = g^{a b} u_{a bbar}, half the Riemannian Laplacian
critical tube radius: cos(sqrt(2K) r0) = (2s + 1 - n) / (n + 1), first Dirichlet eigenvalue (n + 1) K
volume measure: 2^n det g times the Lebesgue measure, CP^1 with Ric = g has volume 4 pi
chern factor: lambda = mean scalar curvature / n with 2 pi c_1 = lambda [omega], positive sign for c_1 > 0
volume formula: V = (2 pi)^n int c_1^n / (n! lambda^n), int c_1^n = (n + 1)^n on CP^n
"""


def ledger_hash() -> str:
    """
    SHA-256 digest of the convention ledger.
    """
    return hashlib.sha256(CONVENTION_LEDGER.encode("utf-8")).hexdigest()
