# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

import hashlib

from kahlercomp.domain.models import CONVENTION_LEDGER, ledger_hash


class TestConventions:

    def test_ledger_hash(self):
        assert ledger_hash() == hashlib.sha256(CONVENTION_LEDGER.encode("utf-8")).hexdigest()
        assert len(ledger_hash()) == 64
        assert "e_1 = sqrt(2) v" in CONVENTION_LEDGER
        assert "R[i, j, k, l] = K (g[i, j] g[k, l] + g[i, l] g[k, j])" in CONVENTION_LEDGER
