# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
The continuous side: points of S^2 = SU(2)/T, coherent state projectors, exact quadrature for band-limited
integrands, band-limited functions as covariant symbols of matrices and the continuous Lipschitz seminorm
sup_x ||df_x||.

A point (theta, phi) is represented by R(theta, phi) = exp(phi/2 E_3) exp(theta/2 E_2); its coherent vector at
level n is U_R e_0 and its coherent projector the rank one projection onto that vector.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Union

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.optimize import minimize

from fuzzydirac.log import Logger
from fuzzydirac.core.lie_algebra import irrep, E2, E3, GroupElement
from fuzzydirac.utils.constants import DEFAULT_SPHERE_RESOLUTION
from fuzzydirac.utils.exceptions import NotSelfAdjoint
from fuzzydirac.utils.numlin import herm_eig, expm_skew, is_hermitian, commutator, as_matrix


@dataclass(frozen=True)
class GroupPoint:
    """
    A point of the sphere in polar angles. Angles are wrapped to theta in [0, pi] and phi in [0, 2 pi).
    """
    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta) % (2 * np.pi)
        phi = float(self.phi)
        if theta > np.pi:
            theta = 2 * np.pi - theta
            phi = phi + np.pi
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi % (2 * np.pi))

    @property
    def rotation(self) -> np.ndarray:
        """
        R(theta, phi) in SU(2).
        """
        return expm_skew(E3, self.phi / 2) @ expm_skew(E2, self.theta / 2)

    def lift(self, n: int) -> np.ndarray:
        rep = irrep(n)
        return expm_skew(rep.generators[2], self.phi / 2) @ expm_skew(rep.generators[1], self.theta / 2)

    def cartesian(self) -> np.ndarray:
        return np.array([np.sin(self.theta) * np.cos(self.phi), np.sin(self.theta) * np.sin(self.phi),
                         np.cos(self.theta)])


def group_point(theta: float, phi: float) -> GroupPoint:
    return GroupPoint(theta, phi)


def group_point_from_element(h: np.ndarray) -> GroupPoint:
    """
    Reads the point of the coset h T off its first column (e^{i phi/2} cos(theta/2), e^{-i phi/2} sin(theta/2)),
    up to the phase of the torus.
    """
    v = np.asarray(h)[:, 0]
    theta = 2.0 * np.arctan2(np.abs(v[1]), np.abs(v[0]))
    phi = np.angle(v[0]) - np.angle(v[1]) if np.abs(v[0]) > 0 and np.abs(v[1]) > 0 else 0.0
    return GroupPoint(theta, phi)


def rotate_point(g: Union[GroupElement, np.ndarray], p: GroupPoint) -> GroupPoint:
    """
    The action g . p of SU(2) on the sphere.
    """
    g_matrix = g.matrix if isinstance(g, GroupElement) else np.asarray(g)
    return group_point_from_element(g_matrix @ p.rotation)


class CoherentFamily:
    """
    Coherent vectors of level n evaluated on arrays of angles.
    """

    def __init__(self, n: int):
        self.n = n
        rep = irrep(n)
        # exp(s U_{E_2}) e_0 = V diag(exp(-i s lambda)) V* e_0 with i U_{E_2} = V diag(lambda) V*
        self._eigenvalues, self._eigenvectors = herm_eig(1j * rep.generators[1])
        self._start = np.conj(self._eigenvectors[0, :])
        self._weights = n - 2 * np.arange(n + 1)

    def vectors(self, thetas, phis) -> np.ndarray:
        """
        :return: array of shape (N, n + 1) holding the coherent vectors of the points (thetas[i], phis[i])
        """
        thetas = np.atleast_1d(np.asarray(thetas, dtype=float))
        phis = np.atleast_1d(np.asarray(phis, dtype=float))
        phases = np.exp(-0.5j * thetas[:, None] * self._eigenvalues[None, :])
        vectors = np.einsum("ij,nj,j->ni", self._eigenvectors, phases, self._start)
        return vectors * np.exp(0.5j * phis[:, None] * self._weights[None, :])

    def projectors(self, thetas, phis) -> np.ndarray:
        vectors = self.vectors(thetas, phis)
        return np.einsum("ni,nj->nij", vectors, np.conj(vectors))

    def expectations(self, b: np.ndarray, thetas, phis) -> np.ndarray:
        """
        :return: tr(b P_x) = <xi_x, b xi_x> for all points
        """
        vectors = self.vectors(thetas, phis)
        return np.einsum("ni,ij,nj->n", np.conj(vectors), b, vectors)


@lru_cache(maxsize=None)
def coherent_family(n: int) -> CoherentFamily:
    return CoherentFamily(n)


def coherent_projector(n: int, p: GroupPoint) -> np.ndarray:
    return coherent_family(n).projectors([p.theta], [p.phi])[0]


@dataclass(frozen=True)
class QuadratureGrid:
    """
    Gauss-Legendre nodes in cos(theta) times uniform nodes in phi. Exact for polynomials of degree <= degree on the
    sphere, in particular for x -> tr(b P^n_x) tr(c P^n'_x) whenever n + n' <= degree.
    """
    degree: int
    theta_nodes: np.ndarray
    theta_weights: np.ndarray
    phi_nodes: np.ndarray
    thetas: np.ndarray = field(repr=False)
    phis: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return self.weights.shape[0]

    def integrate(self, values) -> complex:
        return np.sum(self.weights * np.asarray(values))


@lru_cache(maxsize=None)
def quadrature_grid(degree: int) -> QuadratureGrid:
    """
    :param degree: the largest polynomial degree integrated exactly, >= 0
    """
    if degree < 0:
        msg = f"A quadrature grid needs a non-negative degree, got {degree}"
        Logger().critical(msg)
        raise ValueError(msg)
    n_theta = int(np.ceil((degree + 2) / 2))
    n_phi = degree + 1
    cosines, gauss_weights = leggauss(n_theta)
    theta_nodes = np.arccos(cosines)
    theta_weights = gauss_weights / 2.0
    phi_nodes = 2 * np.pi * np.arange(n_phi) / n_phi
    thetas, phis = np.meshgrid(theta_nodes, phi_nodes, indexing="ij")
    weights = np.repeat(theta_weights, n_phi) / n_phi
    return QuadratureGrid(degree=degree, theta_nodes=theta_nodes, theta_weights=theta_weights, phi_nodes=phi_nodes,
                          thetas=thetas.reshape(-1), phis=phis.reshape(-1), weights=weights)


@dataclass(frozen=True)
class BandLimited:
    """
    The function f(x) = tr(b P^L_x) on the sphere, represented by b in B^L.
    """
    level: int
    matrix: np.ndarray

    @property
    def is_self_adjoint(self) -> bool:
        return is_hermitian(self.matrix)

    def values(self, thetas, phis) -> np.ndarray:
        return coherent_family(self.level).expectations(self.matrix, thetas, phis)

    def __call__(self, p: GroupPoint) -> complex:
        return complex(self.values([p.theta], [p.phi])[0])


def symbol_covariant(b: np.ndarray) -> BandLimited:
    b = as_matrix(b)
    b.flags.writeable = False
    return BandLimited(level=b.shape[0] - 1, matrix=b)


def evaluate(f: BandLimited, p: GroupPoint) -> complex:
    return f(p)


def _require_self_adjoint(f: BandLimited):
    if not f.is_self_adjoint:
        msg = f"The function needs to be real valued, its representing matrix at level {f.level} is not hermitian"
        Logger().critical(msg)
        raise NotSelfAdjoint(msg)


def grad_norms(f: BandLimited, thetas, phis) -> np.ndarray:
    """
    ||df_x|| = sqrt(sum_j (alpha_{E_j} f)(x)^2) on arrays of points, using alpha_X(symbol(b)) = symbol([U_X, b]).

    :raises NotSelfAdjoint: if f is not real valued
    """
    _require_self_adjoint(f)
    family = coherent_family(f.level)
    squares = sum(np.real(family.expectations(commutator(u, f.matrix), thetas, phis)) ** 2
                  for u in irrep(f.level).generators)
    return np.sqrt(squares)


def grad_norm(f: BandLimited, p: GroupPoint) -> float:
    return float(grad_norms(f, [p.theta], [p.phi])[0])


@dataclass(frozen=True)
class SphereSupremum:
    value: float
    theta: float
    phi: float
    grid_value: float
    grid_error: float


def sphere_supremum(func: Callable, resolution: int = DEFAULT_SPHERE_RESOLUTION, refine: bool = True,
                    starts: int = 1) -> SphereSupremum:
    """
    Maximizes a function of the polar angles on a resolution x 2 resolution grid followed by Nelder-Mead from the
    best nodes.

    :param func: vectorized function (thetas, phis) -> real values
    :param resolution: number of polar grid lines
    :param refine: run the local refinement
    :param starts: number of best grid nodes the refinement starts from
    :return: SphereSupremum; grid_error is the largest difference between neighbouring grid values
    """
    theta_axis = np.linspace(0.0, np.pi, resolution)
    phi_axis = 2 * np.pi * np.arange(2 * resolution) / (2 * resolution)
    thetas, phis = np.meshgrid(theta_axis, phi_axis, indexing="ij")
    values = np.asarray(func(thetas.reshape(-1), phis.reshape(-1)), dtype=float).reshape(thetas.shape)
    variation = max(float(np.max(np.abs(np.diff(values, axis=0)), initial=0.0)),
                    float(np.max(np.abs(np.diff(values, axis=1)), initial=0.0)))
    best_index = np.unravel_index(np.argmax(values), values.shape)
    grid_value = float(values[best_index])
    best = (grid_value, float(thetas[best_index]), float(phis[best_index]))

    if refine:
        def objective(angles):
            return -float(np.asarray(func(np.array([angles[0]]), np.array([angles[1]])))[0])

        for flat_index in np.argsort(values.reshape(-1))[::-1][:starts]:
            start = np.array([thetas.reshape(-1)[flat_index], phis.reshape(-1)[flat_index]])
            result = minimize(objective, start, method="Nelder-Mead",
                              options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 1000})
            if -result.fun > best[0]:
                best = (-float(result.fun), float(result.x[0]), float(result.x[1]))
    point = GroupPoint(best[1], best[2])
    return SphereSupremum(value=best[0], theta=point.theta, phi=point.phi, grid_value=grid_value,
                          grid_error=variation)


def cont_seminorm(f: BandLimited, resolution: int = DEFAULT_SPHERE_RESOLUTION) -> float:
    """
    sup_x ||df_x||, the Lipschitz seminorm of f for the Dirac operator of the round sphere, up to grid error.
    """
    _require_self_adjoint(f)
    supremum = sphere_supremum(lambda thetas, phis: grad_norms(f, thetas, phis), resolution)
    Logger().debug(f"Continuous seminorm at level {f.level}: {supremum.value} (grid {resolution}, grid value "
                   f"{supremum.grid_value}, grid error {supremum.grid_error:.3e})")
    return supremum.value
