# Copyright (c) 2026, kahlercomp contributors
# See AUTHORS.md
# All rights reserved.
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, you can obtain one at http://mozilla.org/MPL/2.0/.
# SPDX-License-Identifier: MPL-2.0
# This file is part of the kahlercomp project.

from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np

from kahlercomp.domain.exceptions import MeshDegeneracyException


class SpectralMethod(Enum):
    """
    Method used to obtain an eigenvalue of the complex Laplacian.
    """
    SHOOTING = "shooting"
    MESH = "mesh"
    CLOSED_FORM = "closed_form"


class RadialProfile:
    """
    Complex Laplacian of the distance to a linear subvariety of dimension s in the space form of curvature K, which
    drives the radial reduction of the eigenvalue problem: u''/2 + delta_r(r) u' + lambda u = 0.
    """

    def __init__(self, n: int, s: int, K: float, delta_r: Callable[[float], float]):
        """
        Initialize the profile.

        :param n: Complex dimension of the space.
        :param s: Complex dimension of the subvariety, 0 for a point.
        :param K: Curvature constant of the space.
        :param delta_r: Map from a distance to the complex Laplacian of the distance.
        """
        self.n = n
        self.s = s
        self.K = K
        self.delta_r = delta_r

    @property
    def normal_dim(self) -> int:
        return self.n - self.s

    def __repr__(self):
        return f"RadialProfile(n={self.n}, s={self.s}, K={self.K})"


class SpectralResult:
    """
    Eigenvalue of the complex Laplacian, half the Riemannian one, with the samples of its eigenfunction.

    :param method: Method used.
    :param eigenvalue: Eigenvalue in the complex convention.
    :param residual: Relative residual of the eigenvalue equation over the samples.
    :param sample_points: Points where the eigenfunction is sampled.
    :param sample_values: Values of the eigenfunction.
    """

    def __init__(
        self, method: SpectralMethod, eigenvalue: float, residual: float, sample_points: np.ndarray = None,
        sample_values: np.ndarray = None
    ):
        self.method = method
        self.eigenvalue = eigenvalue
        self.residual = residual
        self.sample_points = np.array([]) if sample_points is None else np.asarray(sample_points)
        self.sample_values = np.array([]) if sample_values is None else np.asarray(sample_values)

    @property
    def riemannian_eigenvalue(self) -> float:
        return 2 * self.eigenvalue

    def __repr__(self):
        return (
            f"{type(self).__name__}(method={self.method.value}, eigenvalue={self.eigenvalue}, "
            f"residual={self.residual:.3e})"
        )


class RadialShootingResult(SpectralResult):
    """
    First Dirichlet eigenvalue of a tube around a linear subvariety, found by shooting.
    """

    def __init__(
        self, eigenvalue: float, residual: float, sample_points: np.ndarray, sample_values: np.ndarray, n: int, s: int,
        r0: float, bracket: Tuple[float, float], iterations: int, critical_radius: float, expected_eigenvalue: float
    ):
        """
        Initialize the result.

        :param eigenvalue: First Dirichlet eigenvalue.
        :param residual: Relative residual of the radial equation.
        :param sample_points: Radii of the samples.
        :param sample_values: Eigenfunction at the radii, normalized to 1 at the center.
        :param n: Complex dimension of the space.
        :param s: Complex dimension of the subvariety.
        :param r0: Radius of the tube.
        :param bracket: Final bisection bracket of the eigenvalue.
        :param iterations: Number of bisection steps.
        :param critical_radius: Radius at which the eigenvalue is expected to be (n + 1) K.
        :param expected_eigenvalue: Eigenvalue expected at the critical radius.
        """
        super().__init__(SpectralMethod.SHOOTING, eigenvalue, residual, sample_points, sample_values)
        self.n = n
        self.s = s
        self.r0 = r0
        self.bracket = bracket
        self.iterations = iterations
        self.critical_radius = critical_radius
        self.expected_eigenvalue = expected_eigenvalue

    @property
    def at_critical_radius(self) -> bool:
        return abs(self.r0 - self.critical_radius) <= 1e-12 * max(1.0, self.critical_radius)

    @property
    def critical_discrepancy(self) -> Optional[float]:
        """
        Difference between the eigenvalue and its expected value when the tube has the critical radius.
        """
        if not self.at_critical_radius:
            return None
        return self.eigenvalue - self.expected_eigenvalue


class TriangleMesh:
    """
    Closed triangulated surface.

    :param vertices: Array of shape (v, 3) of vertex positions.
    :param faces: Array of shape (f, 3) of vertex indices, counterclockwise seen from outside.
    """

    def __init__(self, vertices: np.ndarray, faces: np.ndarray):
        self.vertices = np.asarray(vertices, dtype=float)
        self.faces = np.asarray(faces, dtype=int)
        if self.vertices.ndim != 2 or self.vertices.shape[1] != 3 or self.faces.ndim != 2 or self.faces.shape[1] != 3:
            raise MeshDegeneracyException(
                f"invalid array shapes {self.vertices.shape} and {self.faces.shape}"
            )

    @property
    def nb_vertices(self) -> int:
        return len(self.vertices)

    @property
    def nb_faces(self) -> int:
        return len(self.faces)

    def face_areas(self) -> np.ndarray:
        first = self.vertices[self.faces[:, 1]] - self.vertices[self.faces[:, 0]]
        second = self.vertices[self.faces[:, 2]] - self.vertices[self.faces[:, 0]]
        return np.linalg.norm(np.cross(first, second), axis=1) / 2

    def mean_edge_length(self) -> float:
        edges = [self.vertices[self.faces[:, (i + 1) % 3]] - self.vertices[self.faces[:, i]] for i in range(3)]
        return float(np.mean([np.linalg.norm(edge, axis=1) for edge in edges]))

    def __repr__(self):
        return f"TriangleMesh(vertices={self.nb_vertices}, faces={self.nb_faces})"


class MeshSpectralResult(SpectralResult):
    """
    First nonzero eigenvalue of the complex Laplacian of a sphere, from cotangent Laplacians of nested meshes.
    The eigenvalue is the Richardson extrapolation of the two finest meshes.
    """

    def __init__(
        self, eigenvalue: float, residual: float, mesh: TriangleMesh, spectrum: List[float],
        level_eigenvalues: List[float], level_vertices: List[int], convergence_order: Optional[float]
    ):
        """
        Initialize the result.

        :param eigenvalue: Extrapolated first nonzero eigenvalue.
        :param residual: Relative residual of the generalized eigenproblem on the finest mesh.
        :param mesh: Finest mesh.
        :param spectrum: Lowest eigenvalues on the finest mesh, complex convention.
        :param level_eigenvalues: First nonzero eigenvalue on each mesh, coarsest first.
        :param level_vertices: Number of vertices of each mesh.
        :param convergence_order: Observed order of the eigenvalue error in the mesh size, None without three meshes.
        """
        super().__init__(SpectralMethod.MESH, eigenvalue, residual)
        self.mesh = mesh
        self.spectrum = spectrum
        self.level_eigenvalues = level_eigenvalues
        self.level_vertices = level_vertices
        self.convergence_order = convergence_order

    @property
    def finest_eigenvalue(self) -> float:
        return self.level_eigenvalues[-1]

    def clusters(self, relative_gap: float = 0.1) -> List[List[float]]:
        """
        Group the nonzero eigenvalues of the spectrum whose relative spacing is below relative_gap.
        """
        groups = []
        for value in self.spectrum[1:]:
            if groups and abs(value - groups[-1][-1]) <= relative_gap * abs(groups[-1][-1]):
                groups[-1].append(value)
            else:
                groups.append([value])
        return groups


class BochnerIdentityReport:
    """
    Both sides of the integrated Bochner identity
        lambda |du|^2 = |Hess u|^2 + Ric(du, du)
    for a function u with Delta u = -lambda u on a one dimensional chart.

    :param eigenvalue: Eigenvalue used on the left side.
    :param gradient_energy: Integral of |du|^2.
    :param hessian_energy: Integral of the squared norm of the covariant holomorphic Hessian.
    :param ricci_energy: Integral of Ric(du, du).
    :param eigen_residual: Relative residual of Delta u + lambda u over the quadrature nodes.
    """

    def __init__(
        self, eigenvalue: float, gradient_energy: float, hessian_energy: float, ricci_energy: float,
        eigen_residual: float
    ):
        self.eigenvalue = eigenvalue
        self.gradient_energy = gradient_energy
        self.hessian_energy = hessian_energy
        self.ricci_energy = ricci_energy
        self.eigen_residual = eigen_residual

    @property
    def lhs(self) -> float:
        return self.eigenvalue * self.gradient_energy

    @property
    def rhs(self) -> float:
        return self.hessian_energy + self.ricci_energy

    @property
    def residual(self) -> float:
        scale = max(abs(self.lhs), abs(self.rhs))
        if scale < 1e-14:
            return 0.0
        return abs(self.lhs - self.rhs) / scale

    def __repr__(self):
        return f"BochnerIdentityReport(lhs={self.lhs:.9f}, rhs={self.rhs:.9f}, residual={self.residual:.3e})"


class EqualityCaseReport:
    """
    Quantities vanishing when the first eigenvalue reaches the Ricci lower bound.

    :param uab_norm: Largest norm of the covariant holomorphic Hessian of u over the samples.
    :param phi_variation: Largest deviation of phi = Delta u + c u from its mean over the samples.
    :param c: Einstein constant used in phi.
    """

    def __init__(self, uab_norm: float, phi_variation: float, c: float):
        self.uab_norm = uab_norm
        self.phi_variation = phi_variation
        self.c = c

    def holds(self, tolerance: float = 1e-4) -> bool:
        return self.uab_norm < tolerance and self.phi_variation < tolerance

    def __repr__(self):
        return f"EqualityCaseReport(uab_norm={self.uab_norm:.3e}, phi_variation={self.phi_variation:.3e})"
