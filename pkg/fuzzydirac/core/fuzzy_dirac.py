# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
The Dirac operator D = sum_j alpha_{E_j} (x) kappa_j on B^n (x) S, its spectrum and the seminorms L^D, L_d and L_l
on B^n.

Vectors of B^n (x) S are indexed by ((row * (n + 1) + col) * 2 + spinor).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize

from fuzzydirac.log import Logger
from fuzzydirac.core.clifford import CliffordRep, AntilinearMap, clifford_gammas, clifford_norm, PAULI_Y
from fuzzydirac.core.lie_algebra import (Irrep, GroupElement, irrep, derivation, length_function,
                                         left_multiplication, right_multiplication)
from fuzzydirac.utils.constants import TOL_SPECTRUM, DEFAULT_DIRECTIONS, DEFAULT_REFINEMENT_STARTS, \
    DEFAULT_LELL_SAMPLES
from fuzzydirac.utils.exceptions import SpectrumMismatch, DimensionMismatch
from fuzzydirac.utils.numlin import (identity, kron, op_norm, herm_eig, is_hermitian, commutator, adjoint,
                                     random_unit_vector, as_matrix)


@dataclass(frozen=True)
class DiracOp:
    n: int
    sign: int
    matrix: np.ndarray
    rep: Irrep
    cliff: CliffordRep

    @property
    def dim(self) -> int:
        return 2 * (self.n + 1) ** 2

    @property
    def orientation(self) -> int:
        """
        The sign s for which s D + 2 has the closed form spectrum of predicted_spectrum.

        The derivations are alpha_X = [U_X, .] and the gammas kappa_j = -sign E_j, so D at sign s equals minus the
        operator built from alpha_X = [., U_X]. With that opposite convention the level one spectrum
        {-4 (x2), 0 (x2), 2 (x4)} sits at sign -1; here it sits at sign +1.
        """
        return self.sign

    def left_multiplication(self, a: np.ndarray) -> np.ndarray:
        """
        M_a on B^n (x) S.
        """
        return kron(left_multiplication(a), identity(2))

    def right_multiplication(self, b: np.ndarray) -> np.ndarray:
        return kron(right_multiplication(b), identity(2))

    def charge_conjugation(self) -> AntilinearMap:
        """
        The real structure C(a (x) psi) = a* (x) C_S(psi).
        """
        dim = self.n + 1
        swap = np.zeros((dim * dim, dim * dim), dtype=np.complex128)
        for row in range(dim):
            for col in range(dim):
                swap[col * dim + row, row * dim + col] = 1.0
        return AntilinearMap(kron(swap, PAULI_Y))


@lru_cache(maxsize=None)
def build_dirac(n: int, sign: int = -1) -> DiracOp:
    """
    :param n: level, n >= 1
    :param sign: chirality sign of the spinor representation
    :return: the hermitian DiracOp of dimension 2 (n + 1)^2
    """
    if n < 1:
        msg = f"The Dirac operator needs a level n >= 1, got {n}"
        Logger().critical(msg)
        raise ValueError(msg)
    rep = irrep(n)
    cliff = clifford_gammas(3, sign)
    matrix = sum(kron(derivation(rep, np.eye(3)[j]).matrix, cliff.gammas[j]) for j in range(3))
    matrix.flags.writeable = False
    if not is_hermitian(matrix):
        Logger().warning(f"The Dirac operator at level {n} deviates from hermiticity by "
                         f"{np.max(np.abs(matrix - adjoint(matrix))):.3e}")
    Logger().debug(f"Built the Dirac operator at level {n}, sign {sign}, dimension {matrix.shape[0]}")
    return DiracOp(n=n, sign=sign, matrix=matrix, rep=rep, cliff=cliff)


def predicted_spectrum(n: int) -> list:
    """
    Closed form of the spectrum of the shifted operator D' = s D + 2.

    :return: ascending list of (eigenvalue, multiplicity): +-2k with multiplicity 2k for 1 <= k <= n and 2(n + 1)
        with multiplicity 2(n + 1)
    """
    clusters = [(-2.0 * k, 2 * k) for k in range(n, 0, -1)]
    clusters += [(2.0 * k, 2 * k) for k in range(1, n + 1)]
    clusters.append((2.0 * (n + 1), 2 * (n + 1)))
    return clusters


@dataclass(frozen=True)
class SpectrumCluster:
    eigenvalue: float
    multiplicity: int
    predicted: float
    deviation: float
    # eigenvalues of s D at the negative of this cluster's s D value
    mirror_multiplicity: int = 0


@dataclass(frozen=True)
class SpectrumReport:
    """
    asymmetry holds (magnitude, multiplicity of +magnitude, multiplicity of -magnitude) of the oriented operator
    s D for the magnitudes 2, 4, ..., 2(n + 1).
    """
    n: int
    sign: int
    eigenvalues: np.ndarray
    shifted_eigenvalues: np.ndarray
    clusters: tuple
    max_deviation: float
    asymmetry: tuple = ()

    @property
    def multiplicity_sum(self) -> int:
        return sum(cluster.multiplicity for cluster in self.clusters)

    @property
    def is_symmetric(self) -> bool:
        return all(positive == negative for _, positive, negative in self.asymmetry)


def _count_near(values: np.ndarray, target: float) -> int:
    return int(np.sum(np.abs(values - target) < 0.5))


def spectrum(dirac: DiracOp, tol: float = TOL_SPECTRUM) -> SpectrumReport:
    """
    Computes the spectrum of D and matches the shifted spectrum against the closed form.

    :raises SpectrumMismatch: if a cluster deviates by more than tol or has the wrong multiplicity
    """
    logger = Logger()
    eigenvalues, _ = herm_eig(dirac.matrix)
    oriented = dirac.orientation * eigenvalues
    shifted = np.sort(oriented + 2.0)
    predicted = predicted_spectrum(dirac.n)
    expanded = np.concatenate([np.full(multiplicity, value) for value, multiplicity in predicted])
    clusters = []
    start = 0
    for value, multiplicity in predicted:
        block = shifted[start:start + multiplicity]
        start += multiplicity
        clusters.append(SpectrumCluster(eigenvalue=float(np.mean(block)),
                                        multiplicity=_count_near(shifted, value),
                                        predicted=value,
                                        deviation=float(np.max(np.abs(block - value))),
                                        mirror_multiplicity=_count_near(oriented, 2.0 - value)))
    asymmetry = tuple((2.0 * j, _count_near(oriented, 2.0 * j), _count_near(oriented, -2.0 * j))
                      for j in range(1, dirac.n + 2))
    max_deviation = float(np.max(np.abs(shifted - expanded)))
    logger.debug(f"Spectrum at level {dirac.n}, sign {dirac.sign}: max deviation {max_deviation:.3e}")
    wrong = [c for c in clusters if c.multiplicity != dict(predicted)[c.predicted]]
    if max_deviation > tol or wrong:
        msg = f"The spectrum at level {dirac.n} deviates from the closed form by {max_deviation:.3e} " \
              f"(tolerance {tol:.1e}); clusters with wrong multiplicity: {[c.predicted for c in wrong]}"
        logger.critical(msg)
        raise SpectrumMismatch(msg)
    return SpectrumReport(n=dirac.n, sign=dirac.sign, eigenvalues=eigenvalues, shifted_eigenvalues=shifted,
                          clusters=tuple(clusters), max_deviation=max_deviation, asymmetry=asymmetry)


def _check_level(n: int, a: np.ndarray) -> np.ndarray:
    a = as_matrix(a)
    if a.shape != (n + 1, n + 1):
        msg = f"An element of B^{n} must be {n + 1}x{n + 1}, got {a.shape}"
        Logger().critical(msg)
        raise DimensionMismatch(msg)
    return a


def lip_seminorm(n: int, a: np.ndarray, sign: int = -1) -> float:
    """
    L^D(a) = ||[D, M_a]|| on B^n (x) S.
    """
    a = _check_level(n, a)
    dirac = build_dirac(n, sign)
    multiplication = dirac.left_multiplication(a)
    return op_norm(dirac.matrix @ multiplication - multiplication @ dirac.matrix)


def lip_seminorm_clifford(n: int, a: np.ndarray, sign: int = -1) -> float:
    """
    L^D(a) as the Clifford norm of ([U_{E_1}, a], [U_{E_2}, a], [U_{E_3}, a]).
    """
    a = _check_level(n, a)
    return clifford_norm([commutator(u, a) for u in irrep(n).generators], sign)


def fibonacci_directions(count: int) -> np.ndarray:
    """
    :return: count nearly uniform unit vectors in R^3 on a Fibonacci spiral, shape (count, 3)
    """
    index = np.arange(count) + 0.5
    z = 1.0 - 2.0 * index / count
    radius = np.sqrt(1.0 - z ** 2)
    azimuth = np.pi * (1.0 + np.sqrt(5.0)) * index
    return np.stack([radius * np.cos(azimuth), radius * np.sin(azimuth), z], axis=1)


def _unit_vector(angles) -> np.ndarray:
    theta, phi = angles
    return np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])


def ld_seminorm(n: int, a: np.ndarray, directions: int = DEFAULT_DIRECTIONS,
                starts: int = DEFAULT_REFINEMENT_STARTS) -> float:
    """
    Estimates L_d(a) = sup{||[U_X, a]|| : |X| <= 1} on a Fibonacci grid of directions (together with the coordinate
    axes) followed by Nelder-Mead refinement from the best grid directions. Deterministic.
    """
    a = _check_level(n, a)
    commutators = np.stack([commutator(u, a) for u in irrep(n).generators])
    grid = np.concatenate([np.eye(3), fibonacci_directions(directions)])
    values = op_norm(np.einsum("nj,jkl->nkl", grid, commutators))
    best = float(np.max(values))
    if best == 0.0:
        return 0.0

    def objective(angles):
        return -op_norm(np.einsum("j,jkl->kl", _unit_vector(angles), commutators))

    for index in np.argsort(values)[::-1][:starts]:
        x = grid[index]
        start = np.array([np.arccos(np.clip(x[2], -1.0, 1.0)), np.arctan2(x[1], x[0])])
        result = minimize(objective, start, method="Nelder-Mead",
                          options={"xatol": 1e-10, "fatol": 1e-14, "maxiter": 2000})
        best = max(best, -float(result.fun))
    Logger().debug(f"L_d estimate at level {n} from {grid.shape[0]} directions and {starts} refinements: {best}")
    return best


def lell_estimate(n: int, a: np.ndarray, samples: int = DEFAULT_LELL_SAMPLES, seed: int = 0) -> float:
    """
    Lower estimate of L_l(a) = sup ||alpha_g(a) - a|| / l(g) over g = exp(t X) for random unit directions X and a
    geometric ladder of times down to 1e-4. Directions are drawn in sequence, so more samples never decrease the
    estimate.
    """
    a = _check_level(n, a)
    rng = np.random.default_rng(seed)
    rep = irrep(n)
    times = np.geomspace(2.0, 1e-4, 24)
    best = 0.0
    for _ in range(samples):
        x = tuple(float(c) for c in random_unit_vector(3, rng))
        for t in times:
            g = GroupElement(x, float(t))
            u = g.lift(rep)
            length = length_function(g.matrix)
            if length > 0.0:
                best = max(best, op_norm(u @ a @ adjoint(u) - a) / length)
    return best
