# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Complex Clifford algebras of R^m with the convention uv + vu = -2<u, v>, their irreducible spinor representations,
the chirality element, the norm of Clifford-valued elements and the charge conjugation for m = 3.
"""

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from typing import Sequence

import numpy as np

from fuzzydirac.log import Logger
from fuzzydirac.core.lie_algebra import E1, E2, E3
from fuzzydirac.utils.exceptions import DimensionMismatch
from fuzzydirac.utils.numlin import identity, kron, op_norm, adjoint

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

CHIRALITY_PHASES = (1.0, 1j, -1.0, -1j)


def _tensor(factors) -> np.ndarray:
    return reduce(np.kron, factors, np.ones((1, 1), dtype=np.complex128))


@dataclass(frozen=True)
class CliffordRep:
    """
    Irreducible representation kappa of the complex Clifford algebra of R^m on spinors of dimension 2^floor(m/2).
    For odd m the chirality element is represented by sign * I.
    """
    m: int
    gammas: tuple
    sign: int
    chirality: np.ndarray

    @property
    def spinor_dim(self) -> int:
        return self.gammas[0].shape[0]

    def anticommutation_residual(self) -> float:
        residual = 0.0
        for j in range(self.m):
            for k in range(self.m):
                anticommutator = self.gammas[j] @ self.gammas[k] + self.gammas[k] @ self.gammas[j]
                target = -2.0 * float(j == k) * identity(self.spinor_dim)
                residual = max(residual, float(np.max(np.abs(anticommutator - target))))
        return residual


def _chirality_element(gammas: Sequence[np.ndarray], tol: float = 1e-10) -> np.ndarray:
    product = reduce(np.matmul, gammas)
    dim = product.shape[0]
    for zeta in CHIRALITY_PHASES:
        candidate = zeta * product
        if np.max(np.abs(candidate @ candidate - identity(dim))) < tol and \
                np.max(np.abs(candidate - adjoint(candidate))) < tol:
            return candidate
    msg = "No phase turns the product of the generators into a self-adjoint involution"
    Logger().critical(msg)
    raise ArithmeticError(msg)


def _fock_gammas(m: int) -> list:
    k = m // 2
    gammas = []
    for j in range(k):
        for pauli in (PAULI_X, PAULI_Y):
            gammas.append(1j * _tensor([PAULI_Z] * j + [pauli] + [identity(2)] * (k - j - 1)))
    if m % 2 == 1:
        gammas.append(1j * _tensor([PAULI_Z] * k))
    return gammas


def clifford_word(gammas: Sequence[np.ndarray], indices: Sequence[int]) -> np.ndarray:
    """
    :return: the product kappa_{j_1} ... kappa_{j_r} for indices (j_1, ..., j_r); the identity for no indices
    """
    return reduce(np.matmul, [gammas[j] for j in indices], identity(gammas[0].shape[0]))


def clifford_words(m: int):
    """
    All increasing index tuples, i.e. the basis words of the Clifford algebra of R^m.
    """
    for r in range(m + 1):
        yield from combinations(range(m), r)


def _intertwine(source: Sequence[np.ndarray], target: Sequence[np.ndarray]) -> list:
    """
    Conjugates the generators source into the equivalent irreducible generators target by the group average
    W = sum_q T_q X K_q^{-1} over the basis words q.
    """
    dim = source[0].shape[0]
    for seed in range(dim * dim):
        x = np.zeros((dim, dim), dtype=np.complex128)
        x.flat[seed] = 1.0
        w = sum(clifford_word(target, q) @ x @ np.linalg.inv(clifford_word(source, q))
                for q in clifford_words(len(source)))
        scale = np.real((adjoint(w) @ w)[0, 0])
        if scale > 1e-8:
            w = w / np.sqrt(scale)
            return [w @ gamma @ adjoint(w) for gamma in source]
    msg = "The two Clifford representations are not equivalent"
    Logger().critical(msg)
    raise ArithmeticError(msg)


@lru_cache(maxsize=None)
def clifford_gammas(m: int, sign: int = -1) -> CliffordRep:
    """
    Fock construction of the spinor representation. For odd m the last generator is signed so that the chirality
    element is represented by sign * I. For m = 3 the generators are conjugated into the gauge kappa_j = -sign E_j.

    :param m: dimension of the real inner product space, m >= 1
    :param sign: -1 or +1
    """
    if m < 1 or sign not in (-1, 1):
        msg = f"clifford_gammas needs m >= 1 and sign = +-1, got m={m}, sign={sign}"
        Logger().critical(msg)
        raise ValueError(msg)
    gammas = _fock_gammas(m)
    chirality_element = _chirality_element(gammas)
    if m % 2 == 1 and np.real(chirality_element[0, 0]) * sign < 0:
        gammas[-1] = -gammas[-1]
        chirality_element = _chirality_element(gammas)
    if m == 3:
        gammas = _intertwine(gammas, [-sign * E1, -sign * E2, -sign * E3])
        chirality_element = _chirality_element(gammas)
    frozen = []
    for gamma in gammas:
        gamma = np.array(gamma)
        gamma.flags.writeable = False
        frozen.append(gamma)
    return CliffordRep(m=m, gammas=tuple(frozen), sign=sign, chirality=chirality_element)


def chirality(rep: CliffordRep) -> np.ndarray:
    return rep.chirality


def _check_coefficients(coefficients: Sequence[np.ndarray]) -> list:
    coefficients = [np.asarray(a, dtype=np.complex128) for a in coefficients]
    shapes = {a.shape for a in coefficients}
    if len(shapes) != 1 or any(len(s) != 2 or s[0] != s[1] for s in shapes):
        msg = f"Clifford coefficients must be square matrices of one size, got shapes {sorted(shapes)}"
        Logger().critical(msg)
        raise DimensionMismatch(msg)
    return coefficients


def clifford_norm(coefficients: Sequence[np.ndarray], sign: int = -1) -> float:
    """
    Norm of sum_j a_j (x) e_j in B (x) Cl(R^m), computed in the spinor representation. The value does not depend on
    the choice of sign for odd m.

    :param coefficients: the m square matrices a_j
    :param sign: chirality sign of the representation used for odd m
    """
    coefficients = _check_coefficients(coefficients)
    rep = clifford_gammas(len(coefficients), sign)
    return op_norm(sum(kron(a, kappa) for a, kappa in zip(coefficients, rep.gammas)))


def clifford_norm_bounds(coefficients: Sequence[np.ndarray]) -> tuple:
    """
    :return: (max_j ||a_j||, sum_j ||a_j||), the lower and upper bound of clifford_norm
    """
    norms = [op_norm(a) for a in _check_coefficients(coefficients)]
    return max(norms), sum(norms)


@dataclass(frozen=True)
class AntilinearMap:
    """
    The antilinear map v -> matrix conj(v).
    """
    matrix: np.ndarray

    def apply(self, v: np.ndarray) -> np.ndarray:
        return self.matrix @ np.conj(v)

    def compose(self, other: "AntilinearMap") -> np.ndarray:
        """
        :return: the linear map self o other as a matrix
        """
        return self.matrix @ np.conj(other.matrix)

    def inverse(self) -> "AntilinearMap":
        return AntilinearMap(np.conj(np.linalg.inv(self.matrix)))

    def conjugate(self, a: np.ndarray) -> np.ndarray:
        """
        :return: the linear map C a C^{-1} = matrix conj(a) matrix^{-1}
        """
        return self.matrix @ np.conj(a) @ np.linalg.inv(self.matrix)


def charge_conj_3d() -> AntilinearMap:
    """
    The real structure C_S(v) = sigma_2 conj(v) on the spinors of the Clifford algebra of R^3.
    """
    return AntilinearMap(PAULI_Y.copy())


def clifford_conjugation(coefficients: dict) -> dict:
    """
    The antilinear automorphism c of the Clifford algebra of R^3 implemented by C_S: it conjugates the coefficients
    and fixes the basis words.

    :param coefficients: mapping of index tuples (basis words) to complex coefficients
    """
    return {word: complex(np.conj(value)) for word, value in coefficients.items()}


def clifford_element(rep: CliffordRep, coefficients: dict) -> np.ndarray:
    return sum(value * clifford_word(rep.gammas, word) for word, value in coefficients.items())


def charge_conjugation_residual(rep: CliffordRep) -> float:
    """
    :return: max over all basis words q of ||C_S kappa_q C_S^{-1} - kappa_{c(q)}||
    """
    conjugation = charge_conj_3d()
    return float(max(op_norm(conjugation.conjugate(clifford_word(rep.gammas, q)) - clifford_word(rep.gammas, q))
                     for q in clifford_words(rep.m)))
