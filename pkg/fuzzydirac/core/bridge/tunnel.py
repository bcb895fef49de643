# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Tunnel maps between the spinor spaces B^m (x) S and the band-limited model B^L (x) S of L^2(S^2) (x) S:
theta^A = sigma^A (x) I_S and its Hilbert space adjoint theta^B = sigma^B (x) I_S.

A vector c of B^L stands for the function symbol(c); the model carries the inner product <c, c'> = int conj(f) f'
with Gram matrix G_A = S_L* W S_L on the quadrature grid. B^m carries tr(b* c) / (m + 1).
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.linalg

from fuzzydirac.log import Logger
from fuzzydirac.core.bridge.symbols import symbol_embedding, symbol_sample_matrix
from fuzzydirac.core.fuzzy_dirac import build_dirac
from fuzzydirac.core.sphere_model import quadrature_grid
from fuzzydirac.utils.constants import LOW_BAND_CUTOFF, DEFAULT_WORK_LEVEL_OFFSET
from fuzzydirac.utils.exceptions import BandTooSmall
from fuzzydirac.utils.numlin import adjoint, herm_eig, identity, kron, op_norm, random_unit_vector


def graph_norm(dirac: np.ndarray, xi: np.ndarray, gram: Optional[np.ndarray] = None) -> float:
    """
    ||xi|| + ||D xi|| for the inner product with the given Gram matrix (the standard one if None).
    """
    def norm(v):
        if gram is None:
            return float(np.linalg.norm(v))
        return float(np.sqrt(max(np.real(np.vdot(v, gram @ v)), 0.0)))
    return norm(xi) + norm(dirac @ xi)


@dataclass(frozen=True)
class TunnelMaps:
    m: int
    model_level: int
    sign: int
    theta_a: np.ndarray = field(repr=False)
    theta_b: np.ndarray = field(repr=False)
    gram_a: np.ndarray = field(repr=False)
    gram_b: np.ndarray = field(repr=False)
    dirac_model: np.ndarray = field(repr=False)
    dirac_m: np.ndarray = field(repr=False)

    def inner_a(self, xi: np.ndarray, zeta: np.ndarray) -> complex:
        return complex(np.vdot(xi, self.gram_a @ zeta))

    def inner_b(self, eta: np.ndarray, zeta: np.ndarray) -> complex:
        return complex(np.vdot(eta, self.gram_b @ zeta))

    def norm_a(self, xi: np.ndarray) -> float:
        return float(np.sqrt(max(self.inner_a(xi, xi).real, 0.0)))

    def tunnel_norm(self, xi: np.ndarray, eta: np.ndarray, epsilon: float) -> float:
        """
        max(D^A(xi), D^m(eta), ||xi - theta^A eta|| / epsilon) with the graph norms of both Dirac operators.
        """
        return max(graph_norm(self.dirac_model, xi, self.gram_a), graph_norm(self.dirac_m, eta, self.gram_b),
                   self.norm_a(xi - self.theta_a @ eta) / epsilon)


def tunnel_norm(maps: TunnelMaps, xi: np.ndarray, eta: np.ndarray, epsilon: float) -> float:
    return maps.tunnel_norm(xi, eta, epsilon)


@dataclass(frozen=True)
class TunnelDiagnostics:
    """
    intertwining_a: ||D^A theta^A - theta^A D^m||
    intertwining_b: ||D^m theta^B - theta^B D^A||
    norm_a, norm_b: operator norms of theta^A and theta^B between the two Hilbert spaces
    adjointness: max |<theta^A eta, xi> - <eta, theta^B xi>| over random unit pairs
    transport: max ||D^A theta^A v - lambda theta^A v|| / ||theta^A v|| over the eigenvectors v of D^m
    low_band_defect: ||eta - theta^B theta^A eta|| / ||eta|| maximized over the eigenspaces of D^m in the low band
    tunnel_epsilon: smallest epsilon with ||xi - theta^A theta^B xi|| <= epsilon (||xi|| + ||D^A xi||) on all
        eigenvectors xi of D^A
    """
    intertwining_a: float
    intertwining_b: float
    norm_a: float
    norm_b: float
    adjointness: float
    transport: float
    low_band_defect: float
    tunnel_epsilon: float


def _eigenspaces(matrix: np.ndarray) -> list:
    eigenvalues, eigenvectors = herm_eig(matrix)
    labels = np.round(eigenvalues, 6)
    return [(float(np.mean(eigenvalues[labels == label])), eigenvectors[:, labels == label])
            for label in np.unique(labels)]


def tunnel_maps(m: int, model_level: Optional[int] = None, sign: int = -1, pairs: int = 10, seed: int = 0,
                band: float = LOW_BAND_CUTOFF) -> tuple:
    """
    Assembles theta^A and theta^B between B^m (x) S and the band-limited model at level L and runs their
    diagnostics.

    :param model_level: L >= m, m + 4 if None
    :param band: eigenvalues |lambda| <= band of D^m form the low band
    :return: (TunnelMaps, TunnelDiagnostics)
    :raises BandTooSmall: if L < m
    """
    logger = Logger()
    model_level = m + DEFAULT_WORK_LEVEL_OFFSET if model_level is None else model_level
    if model_level < m:
        msg = f"The band-limited model at level {model_level} cannot contain the symbols of level {m}"
        logger.critical(msg)
        raise BandTooSmall(msg)
    logger.info(f"Assembling the tunnel maps between level {m} and the model at level {model_level}...")
    grid = quadrature_grid(2 * model_level)
    samples_model = symbol_sample_matrix(model_level, grid)
    samples_m = symbol_sample_matrix(m, grid)
    root_weights = np.sqrt(grid.weights)[:, None]

    embedding = symbol_embedding(m, model_level, grid)
    contravariant = (m + 1) * adjoint(samples_m) @ (grid.weights[:, None] * samples_model)
    theta_a = kron(embedding, identity(2))
    theta_b = kron(contravariant, identity(2))
    gram_a = kron(adjoint(samples_model) @ (grid.weights[:, None] * samples_model), identity(2))
    gram_b = identity(theta_b.shape[0]) / (m + 1)
    dirac_model = build_dirac(model_level, sign).matrix
    dirac_m = build_dirac(m, sign).matrix
    maps = TunnelMaps(m=m, model_level=model_level, sign=sign, theta_a=theta_a, theta_b=theta_b, gram_a=gram_a,
                      gram_b=gram_b, dirac_model=dirac_model, dirac_m=dirac_m)

    intertwining_a = op_norm(dirac_model @ theta_a - theta_a @ dirac_m)
    intertwining_b = op_norm(dirac_m @ theta_b - theta_b @ dirac_model)

    # ||theta^A eta||_A = ||W^{1/2} S_m b|| and ||xi||_A = ||W^{1/2} S_L c|| on the grid
    norm_a = np.sqrt(m + 1) * op_norm(root_weights * samples_m)
    orthonormal, _ = scipy.linalg.qr(root_weights * samples_model, mode="economic")
    norm_b = np.sqrt(m + 1) * op_norm(adjoint(samples_m) @ (root_weights * orthonormal))

    rng = np.random.default_rng(seed)
    adjointness = 0.0
    for _ in range(pairs):
        eta = random_unit_vector(theta_a.shape[1], rng) + 1j * random_unit_vector(theta_a.shape[1], rng)
        xi = random_unit_vector(theta_a.shape[0], rng) + 1j * random_unit_vector(theta_a.shape[0], rng)
        adjointness = max(adjointness, abs(maps.inner_a(theta_a @ eta, xi) - maps.inner_b(eta, theta_b @ xi)))

    transport = 0.0
    low_band = 0.0
    berezin = theta_b @ theta_a
    for eigenvalue, vectors in _eigenspaces(dirac_m):
        images = theta_a @ vectors
        transport = max(transport, float(np.max(np.linalg.norm(dirac_model @ images - eigenvalue * images, axis=0)
                                                / np.linalg.norm(images, axis=0))))
        if abs(eigenvalue) <= band:
            low_band = max(low_band, op_norm(vectors - berezin @ vectors))

    # G_A is scalar on the isotypic sectors of B^L, so it commutes with D^A and theta^A theta^B and plain norms
    # give the same ratios on the eigenspaces of D^A
    round_trip = theta_a @ theta_b
    epsilon = 0.0
    for eigenvalue, vectors in _eigenspaces(dirac_model):
        epsilon = max(epsilon, op_norm(vectors - round_trip @ vectors) / (1.0 + abs(eigenvalue)))

    diagnostics = TunnelDiagnostics(intertwining_a=intertwining_a, intertwining_b=intertwining_b,
                                    norm_a=float(norm_a), norm_b=float(norm_b), adjointness=float(adjointness),
                                    transport=transport, low_band_defect=low_band, tunnel_epsilon=epsilon)
    logger.debug(f"Tunnel diagnostics at level {m}: {diagnostics}")
    logger.info(f"Assembling the tunnel maps between level {m} and the model at level {model_level}...[Done]")
    return maps, diagnostics
