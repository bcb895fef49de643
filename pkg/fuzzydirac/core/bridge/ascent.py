# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Random restart ascent for nonsmooth objectives over the unit ball of a seminorm on self-adjoint matrices.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from fuzzydirac.log import Logger
from fuzzydirac.utils.constants import ASCENT_STEPS
from fuzzydirac.utils.numlin import random_hermitian, op_norm


@dataclass(frozen=True)
class AscentResult:
    value: float
    argmax: Optional[np.ndarray]
    evaluations: int
    restart_values: tuple = ()

    @property
    def spread(self) -> float:
        """
        Distance between the best and the worst restart.
        """
        if len(self.restart_values) < 2:
            return 0.0
        return float(max(self.restart_values) - min(self.restart_values))


def hermitian_ascent(objective: Callable, normalize: Callable, initial: np.ndarray, rng: np.random.Generator,
                     steps: int = ASCENT_STEPS, step_size: float = 0.5) -> AscentResult:
    """
    Perturbs the current point by a random hermitian matrix, renormalizes onto the unit sphere of the seminorm and
    accepts on improvement. The step grows after a success and shrinks after a failure.

    :param objective: matrix -> real
    :param normalize: matrix -> matrix on the unit sphere of the seminorm, or None for seminorm zero
    """
    current = normalize(initial)
    value = objective(current) if current is not None else 0.0
    evaluations = 1
    dim = initial.shape[0]
    for _ in range(steps):
        direction = random_hermitian(dim, rng)
        base = current if current is not None else np.zeros_like(initial)
        candidate = normalize(base + step_size * direction / op_norm(direction))
        if candidate is None:
            step_size *= 0.5
            continue
        candidate_value = objective(candidate)
        evaluations += 1
        if candidate_value > value:
            current, value = candidate, candidate_value
            step_size *= 1.5
        else:
            step_size *= 0.5
    return AscentResult(value=float(value), argmax=current, evaluations=evaluations)


def multistart_ascent(objective: Callable, normalize: Callable, starts: Sequence[np.ndarray], restarts: int,
                      seed: int, steps: int = ASCENT_STEPS) -> AscentResult:
    """
    Runs restarts independent ascents. Restart i starts from starts[i % len(starts)], perturbed for i >= len(starts),
    and draws from default_rng([seed, i]) only, so a larger number of restarts never lowers the result.
    """
    best = AscentResult(value=0.0, argmax=None, evaluations=0)
    evaluations = 0
    values = []
    for index in range(restarts):
        rng = np.random.default_rng([seed, index])
        start = np.array(starts[index % len(starts)], dtype=np.complex128)
        if index >= len(starts):
            perturbation = random_hermitian(start.shape[0], rng)
            start = start + 0.5 * op_norm(start) * perturbation / op_norm(perturbation)
        result = hermitian_ascent(objective, normalize, start, rng, steps)
        evaluations += result.evaluations
        values.append(result.value)
        if result.value > best.value:
            best = result
    Logger().debug(f"Ascent over {restarts} restarts: best value {best.value}, {evaluations} evaluations")
    return AscentResult(value=best.value, argmax=best.argmax, evaluations=evaluations, restart_values=tuple(values))
