# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

"""
First eigenvalues of the complex Laplacian of CP^1, the round sphere of Gauss curvature 2K, from cotangent Laplacians
of subdivided icosahedra.
"""

import logging
from collections import Counter
from typing import List, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix, diags, csc_matrix
from scipy.sparse.linalg import eigsh

from kahlercomp.domain.exceptions import MeshDegeneracyException
from kahlercomp.domain.models.spectral import TriangleMesh, MeshSpectralResult

logger = logging.getLogger(__name__)

MINIMUM_VERTICES = 1000
DEFAULT_RESOLUTION = 10000
NB_EIGENVALUES = 9
# Shift of the shift-invert eigensolver, below the zero eigenvalue of constants
EIGENSOLVER_SHIFT = -1e-3
MINIMUM_FACE_AREA = 1e-14


def icosphere(level: int, radius: float = 1.0) -> TriangleMesh:
    """
    Sphere mesh obtained by splitting each face of an icosahedron in four, level times, and projecting the new
    vertices on the sphere. It has 10 * 4^level + 2 vertices.

    :param level: Number of subdivisions.
    :param radius: Radius of the sphere.
    :return: The mesh.
    """
    phi = (1 + np.sqrt(5)) / 2
    vertices = [
        (-1, phi, 0), (1, phi, 0), (-1, -phi, 0), (1, -phi, 0),
        (0, -1, phi), (0, 1, phi), (0, -1, -phi), (0, 1, -phi),
        (phi, 0, -1), (phi, 0, 1), (-phi, 0, -1), (-phi, 0, 1)
    ]
    vertices = [np.array(vertex, dtype=float) / np.linalg.norm(vertex) for vertex in vertices]
    faces = [
        (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
        (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
        (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
        (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1)
    ]
    for _ in range(level):
        midpoints = {}

        def midpoint(first: int, second: int) -> int:
            key = (min(first, second), max(first, second))
            if key not in midpoints:
                middle = vertices[first] + vertices[second]
                vertices.append(middle / np.linalg.norm(middle))
                midpoints[key] = len(vertices) - 1
            return midpoints[key]

        refined = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            refined.extend([(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)])
        faces = refined
    return TriangleMesh(radius * np.array(vertices), np.array(faces))


def check_mesh(mesh: TriangleMesh):
    """
    Check that a mesh is a connected closed surface of genus 0 without degenerate faces.

    :param mesh: Mesh to check.
    :raise MeshDegeneracyException if one of the conditions fails.
    """
    areas = mesh.face_areas()
    if np.min(areas) <= MINIMUM_FACE_AREA:
        raise MeshDegeneracyException(f"face of area {np.min(areas):.3e}")
    edges = Counter(
        (min(face[i], face[(i + 1) % 3]), max(face[i], face[(i + 1) % 3])) for face in mesh.faces.tolist()
        for i in range(3)
    )
    open_edges = [edge for edge, count in edges.items() if count != 2]
    if len(open_edges) > 0:
        raise MeshDegeneracyException(f"{len(open_edges)} edges not shared by exactly two faces")
    graph = nx.Graph()
    graph.add_nodes_from(range(mesh.nb_vertices))
    graph.add_edges_from(edges)
    if not nx.is_connected(graph):
        raise MeshDegeneracyException(f"{nx.number_connected_components(graph)} connected components")
    euler_characteristic = mesh.nb_vertices - len(edges) + mesh.nb_faces
    if euler_characteristic != 2:
        raise MeshDegeneracyException(f"Euler characteristic {euler_characteristic}")


def cotangent_laplacian(mesh: TriangleMesh) -> Tuple[csc_matrix, csc_matrix]:
    """
    Stiffness and lumped mass matrices of the Laplace-Beltrami operator on a mesh. The stiffness matrix is positive
    semidefinite, with weight (cot a + cot b) / 2 on each edge, a and b being the angles opposite to the edge.

    :param mesh: Mesh.
    :return: The stiffness and the mass matrices.
    """
    vertices = mesh.vertices
    faces = mesh.faces
    rows, columns, weights = [], [], []
    for corner in range(3):
        i = faces[:, (corner + 1) % 3]
        j = faces[:, (corner + 2) % 3]
        first = vertices[i] - vertices[faces[:, corner]]
        second = vertices[j] - vertices[faces[:, corner]]
        cotangent = np.sum(first * second, axis=1) / np.linalg.norm(np.cross(first, second), axis=1)
        rows.extend([i, j])
        columns.extend([j, i])
        weights.extend([-cotangent / 2, -cotangent / 2])
    size = mesh.nb_vertices
    off_diagonal = coo_matrix(
        (np.concatenate(weights), (np.concatenate(rows), np.concatenate(columns))), shape=(size, size)
    ).tocsc()
    stiffness = off_diagonal - diags(np.asarray(off_diagonal.sum(axis=1)).ravel())
    lumped = np.zeros(size)
    np.add.at(lumped, faces.ravel(), np.repeat(mesh.face_areas() / 3, 3))
    return stiffness.tocsc(), diags(lumped).tocsc()


def _mesh_spectrum(mesh: TriangleMesh, nb_eigenvalues: int) -> Tuple[np.ndarray, float]:
    """
    Lowest Riemannian eigenvalues of a mesh, and the relative residual of the first nonzero one.
    """
    stiffness, mass = cotangent_laplacian(mesh)
    start = np.random.default_rng(0).standard_normal(mesh.nb_vertices)
    eigenvalues, eigenvectors = eigsh(
        stiffness, k=nb_eigenvalues, M=mass, sigma=EIGENSOLVER_SHIFT, which="LM", v0=start
    )
    order = np.argsort(eigenvalues)
    eigenvalues = eigenvalues[order]
    vector = eigenvectors[:, order[1]]
    weighted = mass @ vector
    residual = np.linalg.norm(stiffness @ vector - eigenvalues[1] * weighted)
    residual /= eigenvalues[1] * np.linalg.norm(weighted)
    return eigenvalues, float(residual)


def level_for_resolution(resolution: int) -> int:
    """
    Smallest subdivision level whose icosphere has at least the requested number of vertices.

    :raise MeshDegeneracyException if the resolution is below MINIMUM_VERTICES.
    """
    if resolution < MINIMUM_VERTICES:
        raise MeshDegeneracyException(f"resolution {resolution} below {MINIMUM_VERTICES} vertices")
    level = 0
    while 10 * 4 ** level + 2 < resolution:
        level += 1
    return level


def mesh_lambda1_cp1(
    mesh_resolution: int = DEFAULT_RESOLUTION, K: float = 1.0, nb_eigenvalues: int = NB_EIGENVALUES
) -> MeshSpectralResult:
    """
    First nonzero eigenvalue of the complex Laplacian of CP^1 with curvature constant K, that is half the first
    eigenvalue of the round sphere of radius 1 / sqrt(2K). The eigenvalue is extrapolated from the two finest of three
    nested meshes, the finest one having at least mesh_resolution vertices.

    :param mesh_resolution: Minimum number of vertices of the finest mesh.
    :param K: Curvature constant, strictly positive.
    :param nb_eigenvalues: Number of eigenvalues computed on each mesh.
    :return: The eigenvalue, with the spectrum of the finest mesh.
    :raise MeshDegeneracyException if the resolution is too low or a mesh is not a closed surface.
    """
    level = level_for_resolution(mesh_resolution)
    radius = 1 / np.sqrt(2 * K)
    levels = [current for current in range(level - 2, level + 1) if current >= 0]
    level_eigenvalues: List[float] = []
    level_vertices: List[int] = []
    for current in levels:
        mesh = icosphere(current, radius)
        check_mesh(mesh)
        eigenvalues, residual = _mesh_spectrum(mesh, nb_eigenvalues)
        level_eigenvalues.append(float(eigenvalues[1] / 2))
        level_vertices.append(mesh.nb_vertices)
        logger.debug(f"Sphere mesh with {mesh.nb_vertices} vertices: first eigenvalue {eigenvalues[1] / 2:.9f}")

    extrapolated = (4 * level_eigenvalues[-1] - level_eigenvalues[-2]) / 3
    order = None
    if len(level_eigenvalues) == 3:
        coarse_difference = level_eigenvalues[0] - level_eigenvalues[1]
        fine_difference = level_eigenvalues[1] - level_eigenvalues[2]
        if fine_difference != 0 and coarse_difference / fine_difference > 0:
            order = float(np.log2(coarse_difference / fine_difference))
    return MeshSpectralResult(
        eigenvalue=float(extrapolated),
        residual=residual,
        mesh=mesh,
        spectrum=[float(value / 2) for value in eigenvalues],
        level_eigenvalues=level_eigenvalues,
        level_vertices=level_vertices,
        convergence_order=order
    )
