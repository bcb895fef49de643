# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
The bridge from the sphere to B^m with the coherent state pivot x -> P^m_x, its reach and height estimates and the
convergence study over the levels m.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np

from fuzzydirac.log import Logger
from fuzzydirac.core.bridge.ascent import multistart_ascent
from fuzzydirac.core.bridge.symbols import berezin_map, symbol_contravariant
from fuzzydirac.core.fuzzy_dirac import lip_seminorm
from fuzzydirac.core.lie_algebra import zonal_element, isotypic_decomposition
from fuzzydirac.core.sphere_model import (BandLimited, GroupPoint, QuadratureGrid, coherent_family,
                                          coherent_projector, quadrature_grid, symbol_covariant, sphere_supremum,
                                          grad_norms, cont_seminorm)
from fuzzydirac.utils.constants import (DEFAULT_BRIDGE_RESOLUTION, DEFAULT_WORK_LEVEL_OFFSET, RESTARTS_PER_BUDGET,
                                        EPS)
from fuzzydirac.utils.exceptions import DimensionMismatch, SuiteFailure
from fuzzydirac.utils.numlin import adjoint, identity, op_norm, random_hermitian


@dataclass(frozen=True)
class Bridge:
    """
    The pivot x -> P^m_x together with a quadrature grid exact in degree 2m + work level.
    """
    level: int
    work_level: int
    grid: QuadratureGrid = field(repr=False)

    def pivot(self, p: GroupPoint) -> np.ndarray:
        return coherent_projector(self.level, p)

    def check_pivot(self) -> tuple:
        """
        :return: (max ||P_x^2 - P_x||, max |tr(P_x P_x) - 1|) over the grid nodes
        """
        projectors = coherent_family(self.level).projectors(self.grid.thetas, self.grid.phis)
        squares = np.einsum("nij,njk->nik", projectors, projectors)
        projection = float(np.max(np.abs(squares - projectors)))
        unital = float(np.max(np.abs(np.einsum("nii->n", squares) - 1.0)))
        return projection, unital


def make_bridge(m: int, work_level: Optional[int] = None) -> Bridge:
    work_level = m + DEFAULT_WORK_LEVEL_OFFSET if work_level is None else work_level
    return Bridge(level=m, work_level=work_level, grid=quadrature_grid(2 * m + work_level))


def bridge_norm(m: int, f: BandLimited, b: np.ndarray, resolution: int = DEFAULT_BRIDGE_RESOLUTION,
                refine: bool = True) -> float:
    """
    sup_x ||f(x) P^m_x - P^m_x b||. Since P_x is the rank one projection onto the coherent vector xi_x, the operator
    norm at x equals ||conj(f(x)) xi_x - b* xi_x||.
    """
    b = np.asarray(b, dtype=np.complex128)
    if b.shape != (m + 1, m + 1):
        msg = f"bridge_norm at level {m} needs a {m + 1}x{m + 1} matrix, got {b.shape}"
        Logger().critical(msg)
        raise DimensionMismatch(msg)
    family = coherent_family(m)
    b_adjoint = adjoint(b)

    def pointwise(thetas, phis):
        vectors = family.vectors(thetas, phis)
        values = np.conj(f.values(thetas, phis))
        return np.linalg.norm(values[:, None] * vectors - vectors @ b_adjoint.T, axis=1)

    return sphere_supremum(pointwise, resolution, refine=refine).value


def _normalized_by(seminorm):
    def normalize(b):
        b = 0.5 * (b + adjoint(b))
        b = b - np.trace(b) / b.shape[0] * identity(b.shape[0])
        value = seminorm(b)
        if value < EPS:
            return None
        return b / value
    return normalize


def _sector_starts(n: int) -> list:
    return [zonal_element(n, k) for k in range(1, n + 1)]


@dataclass(frozen=True)
class ReachEstimate:
    gamma_b: float
    gamma_a: float
    best_b: Optional[np.ndarray] = field(default=None, repr=False)
    best_f: Optional[np.ndarray] = field(default=None, repr=False)


def reach_estimate(m: int, budget: int = 1, seed: int = 0, work_level: Optional[int] = None,
                   resolution: int = DEFAULT_BRIDGE_RESOLUTION) -> ReachEstimate:
    """
    Lower estimates of the two reaches of the bridge.
    gamma_b: sup of bridge_norm(symbol(b), b) over self-adjoint b with L^D(b) <= 1.
    gamma_a: sup of bridge_norm(f, sigma^B(f)) over band-limited real f at the work level with sup ||df|| <= 1;
    sigma^B(f) lies in the unit ball of L^D by the contraction property of the symbols.

    :param budget: every unit buys three restarts of the ascent
    """
    logger = Logger()
    work_level = m + DEFAULT_WORK_LEVEL_OFFSET if work_level is None else work_level
    restarts = RESTARTS_PER_BUDGET * budget
    logger.info(f"Estimating the reach at level {m} (work level {work_level}, {restarts} restarts)...")

    def objective_b(b):
        return bridge_norm(m, symbol_covariant(b), b, resolution, refine=False)

    result_b = multistart_ascent(objective_b, _normalized_by(lambda b: lip_seminorm(m, b)), _sector_starts(m),
                                 restarts, seed)
    gamma_b = result_b.value
    if result_b.argmax is not None:
        gamma_b = max(gamma_b, bridge_norm(m, symbol_covariant(result_b.argmax), result_b.argmax, resolution))

    grid = quadrature_grid(work_level + m)

    def continuous_seminorm(c):
        f = symbol_covariant(c)
        return sphere_supremum(lambda thetas, phis: grad_norms(f, thetas, phis), resolution, refine=False).value

    def objective_a(c):
        f = symbol_covariant(c)
        return bridge_norm(m, f, symbol_contravariant(f, m, grid), resolution, refine=False)

    result_a = multistart_ascent(objective_a, _normalized_by(continuous_seminorm), _sector_starts(work_level),
                                 restarts, seed + 1)
    gamma_a = result_a.value
    best_f = result_a.argmax
    if best_f is not None:
        # the ascent normalizes on the unrefined grid, which underestimates sup ||df||
        best_f = best_f / cont_seminorm(symbol_covariant(best_f), resolution)
        f = symbol_covariant(best_f)
        gamma_a = bridge_norm(m, f, symbol_contravariant(f, m, grid), resolution)
    logger.info(f"Estimating the reach at level {m}...[Done] gamma_A = {gamma_a:.6g}, gamma_B = {gamma_b:.6g}")
    return ReachEstimate(gamma_b=gamma_b, gamma_a=gamma_a, best_b=result_b.argmax, best_f=best_f)


@dataclass(frozen=True)
class HeightEstimate:
    """
    delta_hat: lower estimate of sup ||b - sigma^B(sigma^A(b))|| over L^D(b) <= 1
    surrogate: max_k (1 - lambda_k) ||b_k|| for the maximizer b split into its sector components b_k
    a_side_height: the height on the sphere side, which vanishes because the pivot states exhaust the sphere
    spread: distance between the best and the worst restart of the ascent
    """
    delta_hat: float
    surrogate: float
    a_side_height: float = 0.0
    spread: float = 0.0
    best_b: Optional[np.ndarray] = field(default=None, repr=False)


def height_estimate(m: int, budget: int = 1, seed: int = 0) -> HeightEstimate:
    logger = Logger()
    berezin, spectrum = berezin_map(m)
    restarts = RESTARTS_PER_BUDGET * budget
    logger.info(f"Estimating the height at level {m} ({restarts} restarts)...")

    def objective(b):
        return op_norm(b - berezin.apply(b))

    result = multistart_ascent(objective, _normalized_by(lambda b: lip_seminorm(m, b)), _sector_starts(m),
                               restarts, seed)
    surrogate = 0.0
    if result.argmax is not None:
        for sector, eigenvalue in zip(isotypic_decomposition(m), spectrum.eigenvalues):
            surrogate = max(surrogate, (1.0 - eigenvalue) * op_norm(sector.projector.apply(result.argmax)))
    logger.info(f"Estimating the height at level {m}...[Done] delta_hat = {result.value:.6g}")
    return HeightEstimate(delta_hat=result.value, surrogate=surrogate, spread=result.spread, best_b=result.argmax)


@dataclass(frozen=True)
class BridgeReport:
    m: int
    lambda_min: float
    gap: float
    gamma_a: float
    gamma_b: float
    delta_hat: float
    height_surrogate: float
    a_side_height: float
    length_bound: float
    covariant_margin: float
    contravariant_margin: float
    berezin_equivariance_residual: float
    delta_hat_spread: float = 0.0
    runtime_ms: Optional[float] = None

    def as_row(self) -> dict:
        return asdict(self)


def contraction_margins(m: int, samples: int = 5, seed: int = 0, work_level: Optional[int] = None,
                        resolution: int = 32) -> tuple:
    """
    Relative margins of the symbol contractions on random inputs:
    min (L^D(b) - sup||d sigma^A(b)||) / L^D(b) and min (sup||df|| - L^D(sigma^B(f))) / sup||df||.
    """
    work_level = m + DEFAULT_WORK_LEVEL_OFFSET if work_level is None else work_level
    rng = np.random.default_rng([seed, m])
    covariant = np.inf
    contravariant = np.inf
    for _ in range(samples):
        b = random_hermitian(m + 1, rng)
        lip = lip_seminorm(m, b)
        covariant = min(covariant, (lip - cont_seminorm(symbol_covariant(b), resolution)) / lip)
        f = symbol_covariant(random_hermitian(work_level + 1, rng))
        continuous = cont_seminorm(f, resolution)
        contravariant = min(contravariant, (continuous - lip_seminorm(m, symbol_contravariant(f, m))) / continuous)
    return float(covariant), float(contravariant)


def bridge_report(m: int, budget: int = 1, seed: int = 0, work_level: Optional[int] = None,
                  record_runtime: bool = False) -> BridgeReport:
    start = time.perf_counter()
    _, spectrum = berezin_map(m)
    reach = reach_estimate(m, budget, seed, work_level)
    height = height_estimate(m, budget, seed)
    covariant, contravariant = contraction_margins(m, seed=seed, work_level=work_level)
    runtime = (time.perf_counter() - start) * 1000.0 if record_runtime else None
    return BridgeReport(m=m, lambda_min=spectrum.lambda_min, gap=spectrum.gap, gamma_a=reach.gamma_a,
                        gamma_b=reach.gamma_b, delta_hat=height.delta_hat, height_surrogate=height.surrogate,
                        a_side_height=height.a_side_height,
                        length_bound=max(reach.gamma_a, reach.gamma_b, height.delta_hat),
                        covariant_margin=covariant, contravariant_margin=contravariant,
                        berezin_equivariance_residual=spectrum.equivariance_residual,
                        delta_hat_spread=height.spread, runtime_ms=runtime)


@dataclass(frozen=True)
class ConvergenceStudy:
    """
    height_within_spread: no height estimate rises above its predecessor by more than the larger restart spread of
    the two levels
    """
    reports: tuple
    gap_strictly_decreasing: bool
    height_decreasing: bool
    reach_nonincreasing: bool
    height_within_spread: bool = True


def convergence_study(m_max: int, budget: int = 1, seed: int = 0, threads: int = 1,
                      work_level_offset: int = DEFAULT_WORK_LEVEL_OFFSET,
                      record_runtime: bool = False) -> ConvergenceStudy:
    """
    Bridge reports for m = 1, ..., m_max. The Berezin gap must decrease strictly; the reach and height estimates are
    lower bounds of sups and their trends are only flagged.

    :raises SuiteFailure: if the Berezin gap does not decrease strictly
    """
    logger = Logger()
    if m_max < 2:
        msg = f"A convergence study needs m_max >= 2, got {m_max}"
        logger.critical(msg)
        raise ValueError(msg)
    logger.info(f"Running the convergence study up to m = {m_max} on {threads} thread(s)...")

    def report(m):
        return bridge_report(m, budget, seed, m + work_level_offset, record_runtime)

    levels = list(range(1, m_max + 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            reports = list(executor.map(report, levels))
    else:
        reports = [report(m) for m in levels]

    pairs = list(zip(reports[:-1], reports[1:]))
    gap_ok = all(later.gap < earlier.gap for earlier, later in pairs)
    height_ok = all(later.delta_hat < earlier.delta_hat for earlier, later in pairs)
    height_noise_ok = all(later.delta_hat - earlier.delta_hat <= max(earlier.delta_hat_spread, later.delta_hat_spread)
                          for earlier, later in pairs)
    reach_ok = all(max(later.gamma_a, later.gamma_b) <= 1.05 * max(earlier.gamma_a, earlier.gamma_b)
                   for earlier, later in pairs)
    if not height_noise_ok:
        logger.warning("The height estimates rise beyond the spread of the ascent restarts over the levels")
    elif not height_ok:
        logger.warning("The height estimates do not decrease strictly over the levels, within the restart spread")
    if not reach_ok:
        logger.warning("The reach estimates increase beyond the 5% noise band over the levels")
    if not gap_ok:
        msg = f"The Berezin gap does not decrease strictly: {[r.gap for r in reports]}"
        logger.critical(msg)
        raise SuiteFailure(msg, [("berezin_gap", r.gap, None) for r in reports])
    logger.info(f"Running the convergence study up to m = {m_max}...[Done]")
    return ConvergenceStudy(reports=tuple(reports), gap_strictly_decreasing=gap_ok, height_decreasing=height_ok,
                            reach_nonincreasing=reach_ok, height_within_spread=height_noise_ok)
