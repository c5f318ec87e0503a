# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
Library parsing the input arguments of kahlercomp
"""

import os
import sys
import getopt

COMMANDS = ("hessian", "riccati", "eigen", "volume", "all")
SPACES = {
    "flat": "flat",
    "fs": "fubini_study",
    "fubini_study": "fubini_study",
    "ch": "complex_hyperbolic",
    "complex_hyperbolic": "complex_hyperbolic",
    "product": "product"
}
OUTPUT_DIR_VARIABLE = "KAHLERCOMP_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "kahlercomp_output"

LONG_OPTIONS = [
    "help",
    "config=",
    "output-dir=",
    "cores=",
    "verbose",
    "rewrite",
    "seed=",
    "space=",
    "K=",
    "K-bound=",
    "n=",
    "sub=",
    "p=",
    "factors=",
    "rmin=",
    "rmax=",
    "rpoints=",
    "eps=",
    "step=",
    "oracles=",
    "instances=",
    "dim=",
    "T=",
    "t0=",
    "mode=",
    "s=",
    "r0=",
    "resolution=",
    "shooting-tol=",
    "lambdas=",
    "k1=",
    "k2=",
    "abs-tol=",
    "rel-tol=",
    "psd-slack="
]


def print_usage():
    """
    Print the usage on the standard output.
    """
    tab = "\t"*3
    print(
        f"\nUsage:\n"
        f"\tpython -m kahlercomp <command> [options]\n\n"
        f"Commands:\n"
        f"\thessian{tab}Hessian comparison of the distance to a submanifold along a normal geodesic.\n"
        f"\triccati{tab}Randomized suite of the abstract Riccati comparison.\n"
        f"\teigen{tab}\tFirst eigenvalue checks: radial shooting, sphere mesh, Bochner identity.\n"
        f"\tvolume{tab}Volume formula, scaling law and volume comparison.\n"
        f"\tall{tab}\tEvery family above.\n"
        f"General options:\n"
        f"\t--config <path>{tab}JSON run configuration, overriding the options.\n"
        f"\t--output-dir <path>{tab}Output directory, ${OUTPUT_DIR_VARIABLE} or {DEFAULT_OUTPUT_DIR} by default.\n"
        f"\t--rewrite{tab}Rewrite the output directory if it already contains data.\n"
        f"\t--cores <int>{tab}Number of cores to use for parallelization, 1 by default.\n"
        f"\t--seed <int>{tab}Seed of the randomized computations, 0 by default.\n"
        f"\t--verbose{tab}Verbose mode. Display debug logs.\n"
        f"\t--help{tab}\tDisplay this help.\n"
        f"Space options:\n"
        f"\t--space <flat|fs|ch|product>\tModel space of the Hessian comparison.\n"
        f"\t--K <float>{tab}Curvature constant of the model spaces.\n"
        f"\t--n <int>{tab}Complex dimension.\n"
        f"\t--factors <dim:K,...>{tab}Space form factors of a product.\n"
        f"Hessian options:\n"
        f"\t--K-bound <float>{tab}Curvature constant of the bound, the space K by default.\n"
        f"\t--sub <point|linear>{tab}Submanifold the distance is taken to.\n"
        f"\t--p <int>{tab}Complex dimension of a linear submanifold.\n"
        f"\t--rmin <float>, --rmax <float>, --rpoints <int>\tGrid of radii.\n"
        f"\t--eps <float>{tab}Seeding distance of the Riccati evolution.\n"
        f"\t--step <float>{tab}Integration step.\n"
        f"\t--oracles <fd,jacobi>{tab}Oracles compared with the Riccati evolution.\n"
        f"Riccati options:\n"
        f"\t--instances <int>{tab}Number of random instances.\n"
        f"\t--dim <int>{tab}Largest dimension of the instances.\n"
        f"\t--T <float>, --t0 <float>\tInterval of integration.\n"
        f"Eigen options:\n"
        f"\t--mode <radial|mesh|bochner|all>\tEigenvalue checks to run.\n"
        f"\t--s <int>{tab}Dimension of the subspace of the radial problem.\n"
        f"\t--r0 <float>{tab}Radius of the ball, the critical radius by default.\n"
        f"\t--resolution <int>{tab}Number of vertices of the finest sphere mesh.\n"
        f"\t--shooting-tol <float>\t\tTolerance of the shooting bisection.\n"
        f"Volume options:\n"
        f"\t--lambdas <float,...>{tab}Chern factors of the scaling law.\n"
        f"\t--k1 <float>, --k2 <float>\tScalar curvature range of the volume comparison.\n"
        f"Tolerance options:\n"
        f"\t--abs-tol <float>, --rel-tol <float>, --psd-slack <float>\n"
        f"{tab}Options are long-form only. The JSON configuration follows the layout of the report config."
    )


def _error(message: str):
    print(f"Error: {message}")
    print_usage()
    sys.exit(2)


def _factors(arg: str) -> list:
    """
    Space form factors of a product given as dim:K pairs.
    """
    factors = []
    for item in arg.split(","):
        dim, K = item.split(":")
        K = float(K)
        if K > 0:
            label = "fubini_study"
        elif K < 0:
            label = "complex_hyperbolic"
        else:
            label = "flat"
        factors.append({"label": label, "n": int(dim), "K": K})
    return factors


def parse(argv):
    """
    Parse the input arguments.

    :return: The command, the path to the JSON configuration file if any and the configuration data of the flags.
    """
    try:
        opts, args = getopt.gnu_getopt(argv, "", LONG_OPTIONS)
    except getopt.GetoptError as e:
        # Bad arguments
        _error(str(e))

    config_file = None
    general = {}
    chart = {}
    submanifold = {}
    hessian = {}
    riccati = {}
    eigen = {}
    volume = {}
    tolerance = {}
    shared = {}
    p = None
    try:
        for opt, arg in opts:
            if opt == "--help":
                print_usage()
                sys.exit()
            elif opt == "--config":
                config_file = arg
            elif opt == "--output-dir":
                general["output_dir"] = arg
            elif opt == "--cores":
                general["cores"] = int(arg)
            elif opt == "--verbose":
                general["verbose"] = True
            elif opt == "--rewrite":
                general["rewrite"] = True
            elif opt == "--seed":
                general["suite_seed"] = int(arg)
            elif opt == "--space":
                if arg not in SPACES:
                    _error(f"unknown space {arg}")
                chart["label"] = SPACES[arg]
            elif opt == "--K":
                shared["K"] = float(arg)
            elif opt == "--n":
                shared["n"] = int(arg)
            elif opt == "--factors":
                chart["factors"] = _factors(arg)
            elif opt == "--K-bound":
                hessian["K_bound"] = float(arg)
            elif opt == "--sub":
                submanifold["kind"] = arg
            elif opt == "--p":
                p = int(arg)
            elif opt == "--rmin":
                hessian["r_min"] = float(arg)
            elif opt == "--rmax":
                hessian["r_max"] = float(arg)
            elif opt == "--rpoints":
                hessian["r_points"] = int(arg)
            elif opt == "--eps":
                hessian["eps"] = float(arg)
            elif opt == "--step":
                hessian["step"] = riccati["step"] = float(arg)
            elif opt == "--oracles":
                hessian["oracles"] = [oracle for oracle in arg.split(",") if oracle]
            elif opt == "--instances":
                riccati["instances"] = int(arg)
            elif opt == "--dim":
                riccati["dim"] = int(arg)
            elif opt == "--T":
                riccati["T"] = float(arg)
            elif opt == "--t0":
                riccati["t0"] = float(arg)
            elif opt == "--mode":
                eigen["mode"] = arg
            elif opt == "--s":
                eigen["s"] = int(arg)
            elif opt == "--r0":
                eigen["r0"] = float(arg)
            elif opt == "--resolution":
                eigen["resolution"] = int(arg)
            elif opt == "--shooting-tol":
                eigen["shooting_tol"] = float(arg)
            elif opt == "--lambdas":
                volume["lambda_values"] = [float(value) for value in arg.split(",")]
            elif opt == "--k1":
                volume["k1"] = float(arg)
            elif opt == "--k2":
                volume["k2"] = float(arg)
            elif opt == "--abs-tol":
                tolerance["abs_tol"] = float(arg)
            elif opt == "--rel-tol":
                tolerance["rel_tol"] = float(arg)
            elif opt == "--psd-slack":
                tolerance["psd_slack"] = float(arg)
    except ValueError as e:
        _error(f"invalid value for {opt}: {e}")

    command = None
    if len(args) > 1:
        _error(f"a single command is expected, got {' '.join(args)}")
    elif len(args) == 1:
        command = args[0]
        if command not in COMMANDS:
            _error(f"unknown command {command}")
    elif config_file is None:
        _error("a command must be specified")
    if config_file is not None and not os.path.exists(config_file):
        print(f"Error: file {config_file} not found")
        sys.exit(2)

    # The space options apply to the families of the command
    if command in ("hessian", "all", None):
        chart.update(shared)
    if command in ("eigen", "all", None):
        eigen.update(shared)
    if command in ("volume", "all", None):
        volume.update(shared)

    if p is not None:
        # Linear subvariety spanned by the coordinate directions following the normal one
        submanifold.setdefault("kind", "linear")
        submanifold["tangent_indices"] = list(range(1, p + 1))
    if "factors" in chart:
        chart.setdefault("label", "product")
        chart.setdefault("n", sum(factor["n"] for factor in chart["factors"]))
    if chart:
        hessian["chart"] = chart
    if submanifold:
        hessian["submanifold"] = submanifold

    flag_data = dict(general)
    if command is not None:
        flag_data["command"] = command
    flag_data.setdefault("output_dir", os.environ.get(OUTPUT_DIR_VARIABLE, DEFAULT_OUTPUT_DIR))
    if hessian:
        flag_data["hessian"] = [hessian]
    for name, section in (("riccati", riccati), ("eigen", eigen), ("volume", volume), ("tolerance", tolerance)):
        if section:
            flag_data[name] = section
    return command, config_file, flag_data
