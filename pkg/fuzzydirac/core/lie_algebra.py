# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
su(2) structure data: the basis E_1, E_2, E_3 (i times the Pauli matrices in a fixed gauge), the irreducible
representations by highest weight, the actions on the matrix algebras B^n = M_{n+1}(C) by derivations and by
conjugation, the isotypic decomposition of B^n and the bi-invariant length function on SU(2).

Matrices in B^n are vectorized row-major, vec(T)[r * (n + 1) + c] = T[r, c]. With this convention left
multiplication by A is kron(A, I), right multiplication by B is kron(I, B^T) and T -> U T U* is kron(U, conj(U)).
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from fuzzydirac.log import Logger
from fuzzydirac.utils.constants import TAU_HERM, ISOTYPIC_GAP_TOLERANCE
from fuzzydirac.utils.exceptions import NotGroupElement, NotSU2, DegenerateSpectrum, DimensionMismatch
from fuzzydirac.utils.numlin import (identity, kron, expm_skew, herm_eig, is_unitary, adjoint, commutator,
                                     random_unit_vector)


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.complex128)
    a.flags.writeable = False
    return a


E1 = _frozen([[0, 1j], [1j, 0]])
E2 = _frozen([[0, -1], [1, 0]])
E3 = _frozen([[1j, 0], [0, -1j]])


@dataclass(frozen=True)
class LieBasis:
    """
    Orthonormal basis of su(2) for the pairing <X, Y> = -1/2 trace(XY).
    """
    generators: tuple = (E1, E2, E3)

    @staticmethod
    def inner_product(x: np.ndarray, y: np.ndarray) -> float:
        return float(np.real(-0.5 * np.trace(x @ y)))

    def element(self, coefficients: Sequence[float]) -> np.ndarray:
        return sum(float(c) * e for c, e in zip(coefficients, self.generators))

    def coefficients(self, x: np.ndarray) -> np.ndarray:
        return np.array([self.inner_product(x, e) for e in self.generators])

    def structure_residual(self) -> float:
        """
        :return: the largest deviation from E_1 E_2 = E_3 (and cyclic), E_j^2 = -I and <E_j, E_k> = delta_jk
        """
        residuals = []
        for j in range(3):
            a, b, c = self.generators[j], self.generators[(j + 1) % 3], self.generators[(j + 2) % 3]
            residuals.append(np.max(np.abs(a @ b - c)))
            residuals.append(np.max(np.abs(a @ a + identity(2))))
            for k in range(3):
                residuals.append(abs(self.inner_product(self.generators[j], self.generators[k]) - float(j == k)))
        return float(max(residuals))


def su2_basis() -> LieBasis:
    return LieBasis()


def lie_bracket_coefficients(j: int, k: int) -> np.ndarray:
    """
    Coefficients of [E_j, E_k] in the basis E_1, E_2, E_3 (indices starting at 0).
    """
    basis = su2_basis()
    return basis.coefficients(commutator(basis.generators[j], basis.generators[k]))


@dataclass(frozen=True)
class Irrep:
    """
    The irreducible representation of su(2) with highest weight n on C^{n+1}, in the weight basis ordered
    n, n-2, ..., -n. The highest weight projector is the (0, 0) matrix unit.
    """
    n: int
    generators: tuple
    ladder_h: np.ndarray
    ladder_e: np.ndarray
    ladder_f: np.ndarray
    highest_projector: np.ndarray

    @property
    def dim(self) -> int:
        return self.n + 1

    def lie_element(self, coefficients: Sequence[float]) -> np.ndarray:
        """
        :return: U_X for X = sum_j coefficients[j] E_j
        """
        return sum(float(c) * u for c, u in zip(coefficients, self.generators))

    def highest_weight_vector(self) -> np.ndarray:
        vector = np.zeros(self.dim, dtype=np.complex128)
        vector[0] = 1.0
        return vector

    def commutation_residual(self) -> float:
        u = self.generators
        return float(max(np.max(np.abs(commutator(u[j], u[(j + 1) % 3]) - 2 * u[(j + 2) % 3]), initial=0.0)
                         for j in range(3)))


@lru_cache(maxsize=None)
def irrep(n: int) -> Irrep:
    """
    Builds the irrep of highest weight n from its ladder matrices.

    :param n: highest weight, n >= 0
    :return: Irrep with U_{E_1} = i(U_E + U_F), U_{E_2} = U_F - U_E and U_{E_3} = i U_H
    """
    if n < 0:
        msg = f"The highest weight of an irrep must be non-negative, got {n}"
        Logger().critical(msg)
        raise ValueError(msg)
    dim = n + 1
    weights = n - 2 * np.arange(dim)
    ladder_h = np.diag(weights).astype(np.complex128)
    ladder_e = np.zeros((dim, dim), dtype=np.complex128)
    for k in range(1, dim):
        ladder_e[k - 1, k] = np.sqrt(k * (n - k + 1))
    ladder_f = ladder_e.T.copy()
    generators = (_frozen(1j * (ladder_e + ladder_f)), _frozen(ladder_f - ladder_e), _frozen(1j * ladder_h))
    projector = np.zeros((dim, dim), dtype=np.complex128)
    projector[0, 0] = 1.0
    return Irrep(n=n, generators=generators, ladder_h=_frozen(ladder_h), ladder_e=_frozen(ladder_e),
                 ladder_f=_frozen(ladder_f), highest_projector=_frozen(projector))


def casimir_image(rep: Irrep) -> np.ndarray:
    return sum(u @ u for u in rep.generators)


class SuperopKind(Enum):
    DERIVATION = "derivation"
    CONJUGATION = "conjugation"
    BEREZIN = "berezin"
    PROJECTOR = "projector"


@dataclass(frozen=True)
class Superop:
    """
    A linear map on B^n = M_{n+1}(C), stored as a matrix on the row-major vectorization.
    """
    level: int
    matrix: np.ndarray
    kind: SuperopKind

    def __post_init__(self):
        size = (self.level + 1) ** 2
        if self.matrix.shape != (size, size):
            msg = f"A superoperator on B^{self.level} needs a {size}x{size} matrix, got {self.matrix.shape}"
            Logger().critical(msg)
            raise DimensionMismatch(msg)

    @property
    def dim(self) -> int:
        return self.level + 1

    def apply(self, t: np.ndarray) -> np.ndarray:
        return (self.matrix @ np.asarray(t, dtype=np.complex128).reshape(-1)).reshape(self.dim, self.dim)

    def compose(self, other: "Superop") -> "Superop":
        """
        :return: self after other; the kind of self is kept
        """
        return Superop(self.level, self.matrix @ other.matrix, self.kind)


def left_multiplication(a: np.ndarray) -> np.ndarray:
    return kron(a, identity(a.shape[0]))


def right_multiplication(b: np.ndarray) -> np.ndarray:
    return kron(identity(b.shape[0]), np.asarray(b).T)


def derivation(rep: Irrep, coefficients: Sequence[float]) -> Superop:
    """
    alpha_X(T) = [U_X, T] for X = sum_j coefficients[j] E_j.
    """
    u = rep.lie_element(coefficients)
    return Superop(rep.n, left_multiplication(u) - right_multiplication(u), SuperopKind.DERIVATION)


@dataclass(frozen=True)
class GroupElement:
    """
    The element exp(t X) of SU(2), X = sum_j coefficients[j] E_j. Keeping the Lie algebra data makes the element
    liftable to every irrep.
    """
    coefficients: tuple = (0.0, 0.0, 1.0)
    t: float = 0.0

    @property
    def matrix(self) -> np.ndarray:
        return expm_skew(su2_basis().element(self.coefficients), self.t)

    def lift(self, rep: Irrep) -> np.ndarray:
        return expm_skew(rep.lie_element(self.coefficients), self.t)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.coefficients, -self.t)

    @classmethod
    def random(cls, rng: np.random.Generator) -> "GroupElement":
        direction = random_unit_vector(3, rng)
        return cls(tuple(float(x) for x in direction), float(rng.uniform(0.0, 2 * np.pi)))


def conjugation(rep: Irrep, g: Union[GroupElement, np.ndarray], tol: float = TAU_HERM) -> Superop:
    """
    alpha_g(T) = U_g T U_g^{-1}.

    :param rep: the irrep acting on C^{n+1}
    :param g: a GroupElement, lifted through rep, or an already lifted unitary of size n + 1
    :raises NotGroupElement: if the lifted matrix is not unitary
    """
    u = g.lift(rep) if isinstance(g, GroupElement) else np.asarray(g, dtype=np.complex128)
    if u.shape != (rep.dim, rep.dim) or not is_unitary(u, tol):
        msg = f"conjugation needs a unitary of size {rep.dim}, got a matrix of shape {u.shape} that is not unitary"
        Logger().critical(msg)
        raise NotGroupElement(msg)
    return Superop(rep.n, kron(u, np.conj(u)), SuperopKind.CONJUGATION)


@dataclass(frozen=True)
class IsotypicSector:
    """
    The sector W_k of B^n on which the Casimir superoperator acts as -2k(2k + 2); basis has orthonormal columns.
    """
    k: int
    basis: np.ndarray
    projector: Superop = field(repr=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def casimir_superop(n: int) -> np.ndarray:
    rep = irrep(n)
    derivations = [derivation(rep, np.eye(3)[j]).matrix for j in range(3)]
    return sum(d @ d for d in derivations)


@lru_cache(maxsize=None)
def isotypic_decomposition(n: int, gap_tolerance: float = ISOTYPIC_GAP_TOLERANCE) -> tuple:
    """
    Splits B^n into the eigenspaces of the Casimir superoperator.

    :return: tuple of IsotypicSector for k = 0, ..., n
    :raises DegenerateSpectrum: if an eigenvalue cannot be assigned to a sector within the gap tolerance
    """
    logger = Logger()
    eigenvalues, eigenvectors = herm_eig(casimir_superop(n))
    # -4k(k + 1) = lambda  <=>  (2k + 1)^2 = 1 - lambda
    labels = np.rint((np.sqrt(np.clip(1.0 - eigenvalues, 0.0, None)) - 1.0) / 2.0).astype(int)
    expected = -4.0 * labels * (labels + 1)
    deviation = np.abs(eigenvalues - expected)
    if np.any(deviation > gap_tolerance * np.maximum(1.0, np.abs(expected))):
        msg = f"Casimir eigenvalues of B^{n} cannot be separated into sectors, deviation {np.max(deviation):.3e}"
        logger.critical(msg)
        raise DegenerateSpectrum(msg)
    sectors = []
    for k in range(n + 1):
        basis = eigenvectors[:, labels == k]
        if basis.shape[1] != 2 * k + 1:
            msg = f"Sector {k} of B^{n} has dimension {basis.shape[1]} instead of {2 * k + 1}"
            logger.critical(msg)
            raise DegenerateSpectrum(msg)
        basis = _frozen(basis)
        sectors.append(IsotypicSector(k, basis, Superop(n, _frozen(basis @ adjoint(basis)),
                                                        SuperopKind.PROJECTOR)))
    logger.debug(f"Isotypic decomposition of B^{n}: dimensions {[s.dim for s in sectors]}, "
                 f"max Casimir deviation {np.max(deviation):.3e}")
    return tuple(sectors)


def isotypic_projectors(n: int) -> list:
    """
    :return: list of (k, projector) for k = 0, ..., n
    """
    return [(sector.k, sector.projector) for sector in isotypic_decomposition(n)]


def zonal_element(n: int, k: int) -> np.ndarray:
    """
    The diagonal self-adjoint element of sector k of B^n, normalized to operator norm 1.
    """
    projector = isotypic_decomposition(n)[k].projector
    element = projector.apply(np.linalg.matrix_power(irrep(n).ladder_h, k))
    element = 0.5 * (element + adjoint(element))
    return element / np.max(np.abs(np.linalg.eigvalsh(element)))


def length_function(g: np.ndarray, tol: float = TAU_HERM) -> float:
    """
    The bi-invariant length l(g) = arccos(Re trace(g) / 2), the distance from the identity.

    :param g: 2x2 matrix in SU(2)
    :return: l(g) in [0, pi]
    :raises NotSU2: if g is not unitary with determinant 1
    """
    g = np.asarray(g, dtype=np.complex128)
    if g.shape != (2, 2) or not is_unitary(g, tol) or abs(np.linalg.det(g) - 1.0) > 1e3 * tol:
        msg = "length_function needs an element of SU(2)"
        Logger().critical(msg)
        raise NotSU2(msg)
    return float(np.arccos(np.clip(np.real(np.trace(g)) / 2.0, -1.0, 1.0)))
