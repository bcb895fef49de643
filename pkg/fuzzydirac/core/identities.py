# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Algebraic identities of the Dirac operator: the Casimir formula, the square, SU(2) equivariance and the
zeroth/first-order conditions of the real structure.
"""

from dataclasses import dataclass

import numpy as np

from fuzzydirac.log import Logger
from fuzzydirac.core.clifford import charge_conjugation_residual
from fuzzydirac.core.lie_algebra import irrep, derivation, conjugation, lie_bracket_coefficients, GroupElement, \
    su2_basis, casimir_image
from fuzzydirac.core.fuzzy_dirac import build_dirac, lip_seminorm, lip_seminorm_clifford
from fuzzydirac.utils.constants import TOL_IDENTITY, TOL_EQUIVARIANCE
from fuzzydirac.utils.numlin import identity, kron, op_norm, adjoint, random_hermitian


def _derivation_matrices(n: int) -> list:
    rep = irrep(n)
    return [derivation(rep, np.eye(3)[j]).matrix for j in range(3)]


@dataclass(frozen=True)
class CasimirIdentityReport:
    """
    residual: max over both spinor signs of min_s ||D - s X||, X = (sigma_C - alpha_C (x) I - I (x) sigma_C) / 2
    sign_map: spinor sign -> the matching s
    decomposition_residual: ||sigma_C - alpha_C (x) I - I (x) sigma_C - 2 sum_j alpha_{E_j} (x) E_j||
    spinor_casimir_residual: ||sum_j E_j^2 + 3 I||
    """
    residual: float
    sign_map: dict
    decomposition_residual: float
    spinor_casimir_residual: float


def check_casimir_identity(n: int) -> CasimirIdentityReport:
    alphas = _derivation_matrices(n)
    sigmas = su2_basis().generators
    size = alphas[0].shape[0]
    total = [kron(alpha, identity(2)) + kron(identity(size), sigma) for alpha, sigma in zip(alphas, sigmas)]
    total_casimir = sum(t @ t for t in total)
    alpha_casimir = kron(sum(alpha @ alpha for alpha in alphas), identity(2))
    spinor_casimir = sum(sigma @ sigma for sigma in sigmas)
    difference = total_casimir - alpha_casimir - kron(identity(size), spinor_casimir)
    decomposition_residual = op_norm(difference - 2 * sum(kron(a, s) for a, s in zip(alphas, sigmas)))
    half = 0.5 * difference

    sign_map = {}
    residual = 0.0
    for sign in (-1, 1):
        dirac = build_dirac(n, sign).matrix
        residuals = {s: op_norm(dirac - s * half) for s in (1, -1)}
        best = min(residuals, key=residuals.get)
        sign_map[sign] = best
        residual = max(residual, residuals[best])
    Logger().debug(f"Casimir identity at level {n}: residual {residual:.3e}, signs {sign_map}")
    return CasimirIdentityReport(residual=residual, sign_map=sign_map,
                                 decomposition_residual=decomposition_residual,
                                 spinor_casimir_residual=op_norm(spinor_casimir + 3 * identity(2)))


@dataclass(frozen=True)
class SquareReport:
    residual: float
    curvature_norm: float


def check_square(n: int, sign: int = -1) -> SquareReport:
    """
    Compares D^2 with -alpha_C (x) I + sum_{j<k} alpha_{[E_j, E_k]} (x) kappa_j kappa_k.
    """
    dirac = build_dirac(n, sign)
    alphas = _derivation_matrices(n)
    gammas = dirac.cliff.gammas
    curvature = sum(kron(derivation(dirac.rep, lie_bracket_coefficients(j, k)).matrix, gammas[j] @ gammas[k])
                    for j in range(3) for k in range(j + 1, 3))
    expected = -kron(sum(alpha @ alpha for alpha in alphas), identity(2)) + curvature
    return SquareReport(residual=op_norm(dirac.matrix @ dirac.matrix - expected), curvature_norm=op_norm(curvature))


@dataclass(frozen=True)
class EquivarianceReport:
    residual: float
    invariance_residual: float


def check_equivariance(n: int, trials: int = 8, seed: int = 0, sign: int = -1) -> EquivarianceReport:
    """
    max over random g of ||sigma_g D sigma_g^{-1} - D|| with sigma_g = alpha_g (x) g, and the invariance
    |L(alpha_g(a)) - L(a)| of the seminorm on random self-adjoint a.
    """
    rng = np.random.default_rng(seed)
    dirac = build_dirac(n, sign)
    residual = 0.0
    invariance = 0.0
    for _ in range(trials):
        g = GroupElement.random(rng)
        alpha_g = conjugation(dirac.rep, g)
        sigma = kron(alpha_g.matrix, g.matrix)
        residual = max(residual, op_norm(sigma @ dirac.matrix @ adjoint(sigma) - dirac.matrix))
        a = random_hermitian(n + 1, rng)
        invariance = max(invariance, abs(lip_seminorm(n, alpha_g.apply(a), sign) - lip_seminorm(n, a, sign)))
    Logger().debug(f"Equivariance at level {n}: residual {residual:.3e}, invariance {invariance:.3e}")
    return EquivarianceReport(residual=residual, invariance_residual=invariance)


@dataclass(frozen=True)
class FirstOrderReport:
    zeroth_order: float
    first_order: float
    commutation_sign: int
    commutation_residual: float


def check_first_order(n: int, sign: int = -1) -> FirstOrderReport:
    """
    Over all pairs of matrix units (a, b): ||[M_a, C M_{b*} C^{-1}]|| and ||[[D, M_a], C M_{b*} C^{-1}]||, and the
    sign s with C D = s D C. The pair residuals use Frobenius norms, which bound the operator norms from above.
    """
    dirac = build_dirac(n, sign)
    real_structure = dirac.charge_conjugation()
    dim = n + 1
    units = []
    for row in range(dim):
        for col in range(dim):
            unit = np.zeros((dim, dim), dtype=np.complex128)
            unit[row, col] = 1.0
            units.append(unit)
    left = [dirac.left_multiplication(a) for a in units]
    opposite = [real_structure.conjugate(dirac.left_multiplication(adjoint(b))) for b in units]
    derivatives = [dirac.matrix @ m - m @ dirac.matrix for m in left]

    zeroth = 0.0
    first = 0.0
    for m_a, d_a in zip(left, derivatives):
        for r_b in opposite:
            zeroth = max(zeroth, float(np.linalg.norm(m_a @ r_b - r_b @ m_a)))
            first = max(first, float(np.linalg.norm(d_a @ r_b - r_b @ d_a)))

    conjugated = real_structure.conjugate(dirac.matrix)
    residuals = {s: op_norm(conjugated - s * dirac.matrix) for s in (1, -1)}
    commutation_sign = min(residuals, key=residuals.get)
    Logger().debug(f"Real structure at level {n}: zeroth order {zeroth:.3e}, first order {first:.3e}, "
                   f"C D = {commutation_sign:+d} D C")
    return FirstOrderReport(zeroth_order=zeroth, first_order=first, commutation_sign=commutation_sign,
                            commutation_residual=residuals[commutation_sign])


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)


def check_leibniz(n: int, samples: int = 8, seed: int = 0, sign: int = -1) -> float:
    """
    max ||[D, M_ab] - [D, M_a] M_b - M_a [D, M_b]|| over random self-adjoint a, b.
    """
    rng = np.random.default_rng(seed)
    dirac = build_dirac(n, sign)

    def derivative(a):
        multiplication = dirac.left_multiplication(a)
        return dirac.matrix @ multiplication - multiplication @ dirac.matrix

    residual = 0.0
    for _ in range(samples):
        a = random_hermitian(n + 1, rng)
        b = random_hermitian(n + 1, rng)
        expected = derivative(a) @ dirac.left_multiplication(b) + dirac.left_multiplication(a) @ derivative(b)
        residual = max(residual, op_norm(derivative(a @ b) - expected))
    return residual


def check_spinor_independence(n: int, samples: int = 8, seed: int = 0) -> float:
    """
    Largest relative difference between L^D for the two spinor signs and the Clifford norm formula.
    """
    rng = np.random.default_rng(seed)
    residual = 0.0
    for _ in range(samples):
        a = random_hermitian(n + 1, rng)
        values = [lip_seminorm(n, a, -1), lip_seminorm(n, a, 1), lip_seminorm_clifford(n, a)]
        residual = max(residual, (max(values) - min(values)) / max(1.0, max(values)))
    return residual


def identity_suite(n: int, seed: int = 0, samples: int = 8, tol: float = TOL_IDENTITY,
                   tol_equivariance: float = TOL_EQUIVARIANCE, sign: int = -1) -> list:
    """
    Runs every algebraic identity at level n.

    :return: list of IdentityCheck in a fixed order
    """
    logger = Logger()
    logger.info(f"Running the identity suite at level {n}...")
    rep = irrep(n)
    dirac = build_dirac(n, sign)
    casimir = check_casimir_identity(n)
    square = check_square(n, sign)
    equivariance = check_equivariance(n, seed=seed, sign=sign)
    first_order = check_first_order(n, sign)
    checks = [
        IdentityCheck("su2_structure", su2_basis().structure_residual(), tol),
        IdentityCheck("irrep_commutation", rep.commutation_residual(), tol),
        IdentityCheck("casimir_scalar", op_norm(casimir_image(rep) + n * (n + 2) * identity(n + 1)), tol),
        IdentityCheck("clifford_anticommutation", dirac.cliff.anticommutation_residual(), tol),
        IdentityCheck("charge_conjugation_3d", charge_conjugation_residual(dirac.cliff), tol),
        IdentityCheck("dirac_self_adjoint", op_norm(dirac.matrix - adjoint(dirac.matrix)), tol),
        IdentityCheck("spinor_casimir", casimir.spinor_casimir_residual, tol),
        IdentityCheck("casimir_decomposition", casimir.decomposition_residual, tol),
        IdentityCheck("casimir_identity", casimir.residual, tol),
        IdentityCheck("square", square.residual, tol),
        IdentityCheck("equivariance", equivariance.residual, tol_equivariance),
        IdentityCheck("seminorm_invariance", equivariance.invariance_residual, tol_equivariance),
        IdentityCheck("zeroth_order", first_order.zeroth_order, tol_equivariance),
        IdentityCheck("first_order", first_order.first_order, tol_equivariance),
        IdentityCheck("charge_commutation", first_order.commutation_residual, tol_equivariance),
        IdentityCheck("leibniz", check_leibniz(n, samples, seed, sign), tol_equivariance),
        IdentityCheck("spinor_independence", check_spinor_independence(n, samples, seed), tol_equivariance),
    ]
    failed = [check.name for check in checks if not check.passed]
    if failed:
        logger.warning(f"Identity checks above tolerance at level {n}: {failed}")
    logger.info(f"Running the identity suite at level {n}...[Done]")
    return checks
