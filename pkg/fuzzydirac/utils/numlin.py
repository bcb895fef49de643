# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Dense complex linear algebra used by every other module: predicates, the hermitian eigen solver, the operator norm,
Kronecker products and exponentials of skew-hermitian matrices. Matrices are 2-d numpy arrays of dtype complex128.
"""

import numpy as np
import scipy.linalg

from fuzzydirac.log import Logger
from fuzzydirac.utils.constants import TAU_HERM
from fuzzydirac.utils.exceptions import NotHermitian, NotSkewHermitian, NoConvergence, DimensionMismatch


def as_matrix(a) -> np.ndarray:
    """
    :param a: array-like
    :return: a complex128 copy of a as a 2-d array
    :raises DimensionMismatch: if a is not two dimensional
    """
    a = np.array(a, dtype=np.complex128)
    if a.ndim != 2:
        msg = f"Expected a matrix, got an array of shape {a.shape}"
        Logger().critical(msg)
        raise DimensionMismatch(msg)
    return a


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def adjoint(a: np.ndarray) -> np.ndarray:
    return np.conj(a).T


def _scale(a: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(a)))) if a.size > 0 else 1.0


def is_square(a: np.ndarray) -> bool:
    return np.ndim(a) == 2 and np.shape(a)[0] == np.shape(a)[1]


def is_hermitian(a: np.ndarray, tol: float = TAU_HERM) -> bool:
    """
    :return: True if max|a - a*| <= tol * max(1, max|a|)
    """
    if not is_square(a):
        return False
    return float(np.max(np.abs(a - adjoint(a)), initial=0.0)) <= tol * _scale(a)


def is_skew_hermitian(a: np.ndarray, tol: float = TAU_HERM) -> bool:
    if not is_square(a):
        return False
    return float(np.max(np.abs(a + adjoint(a)), initial=0.0)) <= tol * _scale(a)


def is_unitary(a: np.ndarray, tol: float = TAU_HERM) -> bool:
    if not is_square(a):
        return False
    deviation = adjoint(a) @ a - identity(a.shape[0])
    return float(np.max(np.abs(deviation), initial=0.0)) <= tol * _scale(a)


def herm_eig(a: np.ndarray, tol: float = TAU_HERM):
    """
    Eigen decomposition of a hermitian matrix.

    :param a: hermitian matrix
    :param tol: hermiticity tolerance
    :return: (eigenvalues in ascending order, unitary matrix whose columns are the eigenvectors)
    :raises NotHermitian: if a is not hermitian within tol
    :raises NoConvergence: if LAPACK does not converge
    """
    a = as_matrix(a)
    if not is_hermitian(a, tol):
        msg = f"herm_eig needs a hermitian matrix, the deviation is {np.max(np.abs(a - adjoint(a))):.3e}"
        Logger().critical(msg)
        raise NotHermitian(msg)
    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh(0.5 * (a + adjoint(a)))
    except scipy.linalg.LinAlgError as error:
        msg = f"The hermitian eigen solver did not converge on a {a.shape[0]}x{a.shape[0]} matrix: {error}"
        Logger().critical(msg)
        raise NoConvergence(msg) from error
    return eigenvalues, eigenvectors


def op_norm(a: np.ndarray) -> float:
    """
    Operator norm, i.e. the largest singular value. Stacks of matrices (shape (..., k, l)) give an array of norms.
    """
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    if a.ndim == 2:
        return float(scipy.linalg.norm(a, 2))
    return np.linalg.norm(a, ord=2, axis=(-2, -1))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Kronecker product with (a kron b)[i*q + k, j*r + l] = a[i, j] b[k, l].
    """
    return np.kron(a, b)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def expm_skew(x: np.ndarray, t: float = 1.0, tol: float = TAU_HERM) -> np.ndarray:
    """
    exp(t x) for a skew-hermitian x, computed from the spectral decomposition of the hermitian matrix i x. The
    result is unitary to working precision.

    :param x: skew-hermitian matrix
    :param t: real time
    :raises NotSkewHermitian: if x is not skew-hermitian within tol
    """
    x = as_matrix(x)
    if not is_skew_hermitian(x, tol):
        msg = "expm_skew needs a skew-hermitian matrix"
        Logger().critical(msg)
        raise NotSkewHermitian(msg)
    # i x = V diag(lambda) V*, so exp(t x) = V diag(exp(-i t lambda)) V*
    eigenvalues, eigenvectors = herm_eig(1j * x, tol=tol)
    return (eigenvectors * np.exp(-1j * t * eigenvalues)[None, :]) @ adjoint(eigenvectors)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """
    A hermitian matrix with independent standard normal real and imaginary parts above the diagonal.
    """
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (a + adjoint(a))


def random_unit_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim)
    return v / np.linalg.norm(v)
