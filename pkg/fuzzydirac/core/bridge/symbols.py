# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Contravariant symbols, the Berezin transform sigma^B o sigma^A and its eigenvalues on the isotypic sectors.

With the probability measure on the sphere, the trace on B^m and the factor (m + 1) in the contravariant symbol,
sigma^B is the Hilbert space adjoint of sigma^A for <f, g> = int conj(f) g and <b, c> = tr(b* c) / (m + 1).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import gammaln

from fuzzydirac.log import Logger
from fuzzydirac.core.lie_algebra import Superop, SuperopKind, GroupElement, conjugation, irrep, \
    isotypic_decomposition
from fuzzydirac.core.sphere_model import BandLimited, QuadratureGrid, quadrature_grid, coherent_family
from fuzzydirac.utils.constants import SECTOR_VARIANCE_TOLERANCE
from fuzzydirac.utils.exceptions import DegreeOverflow, SectorNotScalar
from fuzzydirac.utils.numlin import adjoint, op_norm


def _check_grid(grid: QuadratureGrid, degree: int) -> QuadratureGrid:
    if grid is None:
        return quadrature_grid(degree)
    if grid.degree < degree:
        msg = f"A quadrature grid of degree {grid.degree} cannot integrate degree {degree} exactly"
        Logger().critical(msg)
        raise DegreeOverflow(msg)
    return grid


def symbol_contravariant(f: BandLimited, m: int, grid: QuadratureGrid = None) -> np.ndarray:
    """
    sigma^B(f) = (m + 1) int f(x) P^m_x dx, evaluated with a quadrature that is exact in degree f.level + m.

    :raises DegreeOverflow: if the given grid is not exact for that degree
    """
    grid = _check_grid(grid, f.level + m)
    values = f.values(grid.thetas, grid.phis)
    vectors = coherent_family(m).vectors(grid.thetas, grid.phis)
    return (m + 1) * np.einsum("n,ni,nj->ij", grid.weights * values, vectors, np.conj(vectors))


def symbol_sample_matrix(n: int, grid: QuadratureGrid) -> np.ndarray:
    """
    The matrix S with (S vec(b))[x] = tr(b P^n_x) over the grid nodes x, i.e. S[x, :] = conj(vec(P^n_x)).
    """
    projectors = coherent_family(n).projectors(grid.thetas, grid.phis)
    return np.conj(projectors.reshape(grid.size, -1))


def symbol_embedding(m: int, level: int, grid: QuadratureGrid = None) -> np.ndarray:
    """
    The matrix J taking vec(b), b in B^m, to vec(c), c in B^level, with symbol(c) = symbol(b). It exists for
    level >= m because both symbol spaces are the harmonics of degree <= level resp. m.
    """
    grid = _check_grid(grid, 2 * level)
    embedding, *_ = np.linalg.lstsq(symbol_sample_matrix(level, grid), symbol_sample_matrix(m, grid), rcond=None)
    return embedding


def berezin_eigenvalue(m: int, k: int) -> float:
    """
    Closed form m! (m + 1)! / ((m - k)! (m + k + 1)!) of the Berezin transform on sector k of B^m.
    """
    return float(np.exp(gammaln(m + 1) + gammaln(m + 2) - gammaln(m - k + 1) - gammaln(m + k + 2)))


@dataclass(frozen=True)
class BerezinSpectrum:
    """
    eigenvalues[k] is the scalar by which the Berezin transform acts on sector k of B^m.
    """
    level: int
    eigenvalues: tuple
    predicted: tuple
    max_sector_variance: float
    equivariance_residual: float

    @property
    def gap(self) -> float:
        """
        1 - lambda_1, the distance of the Berezin transform from its fixed point below the constants.
        """
        return 1.0 - self.eigenvalues[1]

    @property
    def lambda_min(self) -> float:
        return min(self.eigenvalues)

    @property
    def max_deviation(self) -> float:
        return float(max(abs(a - b) for a, b in zip(self.eigenvalues, self.predicted)))


@lru_cache(maxsize=None)
def berezin_map(m: int, trials: int = 10, seed: int = 0) -> tuple:
    """
    Assembles sigma^B o sigma^A on B^m with the exact quadrature of degree 2m and reads off its sector scalars.

    :return: (Superop, BerezinSpectrum)
    :raises SectorNotScalar: if the Rayleigh block of a sector is not a multiple of the identity
    """
    logger = Logger()
    if m < 1:
        msg = f"The Berezin transform needs m >= 1, got {m}"
        logger.critical(msg)
        raise ValueError(msg)
    grid = quadrature_grid(2 * m)
    samples = symbol_sample_matrix(m, grid)
    matrix = (m + 1) * adjoint(samples) @ (grid.weights[:, None] * samples)
    berezin = Superop(m, matrix, SuperopKind.BEREZIN)

    rng = np.random.default_rng(seed)
    equivariance = 0.0
    for _ in range(trials):
        alpha = conjugation(irrep(m), GroupElement.random(rng)).matrix
        equivariance = max(equivariance, op_norm(matrix @ alpha - alpha @ matrix))

    eigenvalues = []
    max_variance = 0.0
    for sector in isotypic_decomposition(m):
        block = adjoint(sector.basis) @ matrix @ sector.basis
        block_eigenvalues = np.linalg.eigvalsh(0.5 * (block + adjoint(block)))
        value = float(np.mean(block_eigenvalues))
        variance = float(np.mean((block_eigenvalues - value) ** 2))
        if variance > SECTOR_VARIANCE_TOLERANCE:
            msg = f"The Berezin transform is not scalar on sector {sector.k} of B^{m}, variance {variance:.3e}"
            logger.critical(msg)
            raise SectorNotScalar(msg)
        max_variance = max(max_variance, variance)
        eigenvalues.append(value)
    spectrum = BerezinSpectrum(level=m, eigenvalues=tuple(eigenvalues),
                               predicted=tuple(berezin_eigenvalue(m, k) for k in range(m + 1)),
                               max_sector_variance=max_variance, equivariance_residual=equivariance)
    logger.debug(f"Berezin transform at level {m}: eigenvalues {spectrum.eigenvalues}, "
                 f"equivariance residual {equivariance:.3e}")
    return berezin, spectrum
