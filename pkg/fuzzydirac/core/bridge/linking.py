# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
The linking Dirac operator of a bridge between two unital subalgebras A and B of a common matrix algebra M_d.

On H_A (+) C^d (+) C^d (+) H_B the pair (a, b) acts by a (+) a (+) b (+) b and
D_r = D_A (+) r^{-1} D_omega (+) D_B with D_omega = [[0, omega], [omega, 0]], so that
||[D_r, (a, b)]|| = max(||[D_A, a]||, r^{-1} max(||a omega - omega b||, ||a* omega - omega b*||), ||[D_B, b]||).
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import block_diag

from fuzzydirac.log import Logger
from fuzzydirac.utils.constants import TOL_IDENTITY, PIVOT_TOLERANCE
from fuzzydirac.utils.exceptions import BadPivot, DimensionMismatch
from fuzzydirac.utils.numlin import adjoint, as_matrix, identity, is_hermitian, op_norm, herm_eig, \
    random_hermitian, random_unit_vector
from fuzzydirac.utils.quality_assurance.data_sanity_testing import assert_array_well_defined


def _check_basis(basis, dim: int, name: str) -> np.ndarray:
    basis = np.asarray(basis, dtype=np.complex128)
    if basis.ndim != 3 or basis.shape[1:] != (dim, dim):
        msg = f"The basis of {name} must be a stack of {dim}x{dim} matrices, got shape {basis.shape}"
        Logger().critical(msg)
        raise DimensionMismatch(msg)
    flat = basis.reshape(basis.shape[0], -1).T
    coefficients, *_ = np.linalg.lstsq(flat, identity(dim).reshape(-1), rcond=None)
    if np.linalg.norm(flat @ coefficients - identity(dim).reshape(-1)) > PIVOT_TOLERANCE:
        msg = f"The span of the basis of {name} does not contain the unit"
        Logger().critical(msg)
        raise ValueError(msg)
    return basis


def _check_pivot(omega: np.ndarray) -> np.ndarray:
    logger = Logger()
    omega = as_matrix(omega)
    assert_array_well_defined(omega, array_name="pivot")
    if not is_hermitian(omega, PIVOT_TOLERANCE):
        msg = "The pivot of a linking operator must be self-adjoint"
        logger.critical(msg)
        raise BadPivot(msg)
    eigenvalues, _ = herm_eig(omega)
    norm = float(np.max(np.abs(eigenvalues)))
    if abs(norm - 1.0) > PIVOT_TOLERANCE or np.min(np.abs(eigenvalues - 1.0)) > PIVOT_TOLERANCE:
        msg = f"The pivot must have norm 1 with 1 in its spectrum, got norm {norm} and spectrum {eigenvalues}"
        logger.critical(msg)
        raise BadPivot(msg)
    return omega


@dataclass(frozen=True)
class LinkingOperator:
    """
    :param radius: the bridge length r > 0 scaling the middle block
    """
    dim: int
    a_basis: np.ndarray = field(repr=False)
    b_basis: np.ndarray = field(repr=False)
    omega: np.ndarray = field(repr=False)
    radius: float
    dirac_a: np.ndarray = field(repr=False)
    dirac_b: np.ndarray = field(repr=False)
    matrix: np.ndarray = field(repr=False)

    @property
    def pivot_dirac(self) -> np.ndarray:
        zero = np.zeros((self.dim, self.dim), dtype=np.complex128)
        return np.block([[zero, self.omega], [self.omega, zero]])

    def representation(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return block_diag(a, a, b, b)

    def commutator_norm(self, a: np.ndarray, b: np.ndarray) -> float:
        """
        ||[D_r, (a, b)]|| on the assembled space.
        """
        pair = self.representation(as_matrix(a), as_matrix(b))
        return op_norm(self.matrix @ pair - pair @ self.matrix)

    def bridge_seminorm(self, a: np.ndarray, b: np.ndarray) -> float:
        """
        ||a omega - omega b||.
        """
        return op_norm(a @ self.omega - self.omega @ b)

    def star_bridge_seminorm(self, a: np.ndarray, b: np.ndarray) -> float:
        return max(self.bridge_seminorm(a, b), self.bridge_seminorm(adjoint(a), adjoint(b)))

    def formula_norm(self, a: np.ndarray, b: np.ndarray) -> float:
        return max(op_norm(self.dirac_a @ a - a @ self.dirac_a),
                   self.star_bridge_seminorm(a, b) / self.radius,
                   op_norm(self.dirac_b @ b - b @ self.dirac_b))

    def random_pair(self, rng: np.random.Generator) -> tuple:
        """
        A random pair (a, b) with complex coefficients over the two bases.
        """
        def draw(basis):
            coefficients = rng.standard_normal(basis.shape[0]) + 1j * rng.standard_normal(basis.shape[0])
            return np.einsum("k,kij->ij", coefficients, basis)
        return draw(self.a_basis), draw(self.b_basis)

    def verify(self, pairs: int = 50, seed: int = 0, tol: float = TOL_IDENTITY) -> float:
        """
        :return: the largest relative difference between commutator_norm and formula_norm over random pairs
        """
        rng = np.random.default_rng(seed)
        residual = 0.0
        for _ in range(pairs):
            a, b = self.random_pair(rng)
            exact = self.commutator_norm(a, b)
            residual = max(residual, abs(exact - self.formula_norm(a, b)) / max(1.0, exact))
        Logger().debug(f"Linking operator on M_{self.dim}: commutator norm identity residual {residual:.3e} over "
                       f"{pairs} pairs")
        if residual > tol:
            Logger().warning(f"The commutator norm identity of the linking operator is off by {residual:.3e}")
        return residual


def linking_dirac(a_basis, b_basis, omega: np.ndarray, r: float, dirac_a: np.ndarray,
                  dirac_b: np.ndarray) -> LinkingOperator:
    """
    Assembles D_r = D_A (+) r^{-1} D_omega (+) D_B.

    :param a_basis: stack of d x d matrices spanning A, with the unit in their span
    :param b_basis: stack of d x d matrices spanning B, with the unit in their span
    :param omega: the pivot, self-adjoint with norm 1 and 1 in its spectrum
    :param r: positive radius
    :param dirac_a: hermitian d x d operator on the space of A
    :param dirac_b: hermitian d x d operator on the space of B
    :raises BadPivot: if the pivot violates its conditions
    """
    logger = Logger()
    omega = _check_pivot(omega)
    dim = omega.shape[0]
    if r <= 0:
        msg = f"The radius of a linking operator must be positive, got {r}"
        logger.critical(msg)
        raise ValueError(msg)
    a_basis = _check_basis(a_basis, dim, "A")
    b_basis = _check_basis(b_basis, dim, "B")
    dirac_a = as_matrix(dirac_a)
    dirac_b = as_matrix(dirac_b)
    for name, operator in (("D_A", dirac_a), ("D_B", dirac_b)):
        if operator.shape != (dim, dim):
            msg = f"{name} must be {dim}x{dim}, got {operator.shape}"
            logger.critical(msg)
            raise DimensionMismatch(msg)
    zero = np.zeros((dim, dim), dtype=np.complex128)
    pivot_dirac = np.block([[zero, omega], [omega, zero]])
    matrix = block_diag(dirac_a, pivot_dirac / r, dirac_b)
    logger.debug(f"Assembled a linking operator of dimension {matrix.shape[0]} with radius {r}")
    return LinkingOperator(dim=dim, a_basis=a_basis, b_basis=b_basis, omega=omega, radius=float(r),
                           dirac_a=dirac_a, dirac_b=dirac_b, matrix=matrix)


def matrix_units(dim: int) -> np.ndarray:
    units = np.zeros((dim * dim, dim, dim), dtype=np.complex128)
    for index in range(dim * dim):
        units[index, index // dim, index % dim] = 1.0
    return units


def diagonal_units(dim: int) -> np.ndarray:
    units = np.zeros((dim, dim, dim), dtype=np.complex128)
    for index in range(dim):
        units[index, index, index] = 1.0
    return units


def linking_demo(seed: int = 0, r: float = 1.0, dim: int = 4) -> LinkingOperator:
    """
    The diagonal subalgebra of M_4 linked to M_4 through a rank one projection, with random hermitian D_A and D_B.
    """
    rng = np.random.default_rng(seed)
    vector = random_unit_vector(dim, rng)
    omega = np.outer(vector, np.conj(vector))
    omega = 0.5 * (omega + adjoint(omega))
    return linking_dirac(diagonal_units(dim), matrix_units(dim), omega, r, random_hermitian(dim, rng),
                         random_hermitian(dim, rng))
