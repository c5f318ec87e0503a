# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from setuptools import setup, find_packages

from kahlercomp._version import version

# Package meta-data.
NAME = 'kahlercomp'
PACKAGE = 'kahlercomp'
DESCRIPTION = 'Numerical verification of Hessian, eigenvalue and volume comparison theorems on Kahler model spaces.'
REQUIRES_PYTHON = '>=3.7'

# What packages are required for this module to be executed?
REQUIRED = [
    "pydantic>=1.9.1,<2",
    "numpy>=1.19.5",
    "networkx>=2.5.1",
    "scipy>=1.5.4"
]

EXTRA_REQUIRED = {
    "tests": [
        "pytest>=6.2.5"
    ]
}


setup(
    name=NAME,
    version=version,
    description=DESCRIPTION,
    packages=find_packages(include=[PACKAGE, f"{PACKAGE}.*"]),
    python_requires=REQUIRES_PYTHON,
    install_requires=REQUIRED,
    extras_require=EXTRA_REQUIRED,
    include_package_data=True,
    zip_safe=False,
    license='MPL-2.0',
    classifiers=[
        # Trove classifiers
        'License :: OSI Approved :: Mozilla Public License 2.0 (MPL 2.0)',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7'
    ]
)
