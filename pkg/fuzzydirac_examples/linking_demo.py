# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from argparse import ArgumentParser

import matplotlib.pyplot as plt
import numpy as np

from fuzzydirac.core.bridge import linking_demo
from fuzzydirac.utils.profiling import profile


@profile
def run_linking_demo(pairs: int = 50, seed: int = 0, visualise: bool = True):
    """
    Links the diagonal subalgebra of M_4 to M_4 through a rank one projection and compares the commutator norm
    of the linking operator with the closed formula for several radii.

    :param pairs: the number of random pairs checked per radius
    :param seed: the random seed
    :param visualise: whether to plot the seminorms against the radius
    """
    radii = np.geomspace(0.25, 4.0, 9)
    rng = np.random.default_rng(seed)
    operator = linking_demo(seed=seed)
    a, b = operator.random_pair(rng)
    commutator_norms = []
    formula_norms = []
    for r in radii:
        operator = linking_demo(seed=seed, r=float(r))
        residual = operator.verify(pairs=pairs, seed=seed)
        print(f"r = {r:.3f}: max |commutator norm - formula| = {residual:.2e}")
        commutator_norms.append(operator.commutator_norm(a, b))
        formula_norms.append(operator.formula_norm(a, b))

    if visualise:
        plt.loglog(radii, commutator_norms, "o", label="commutator norm")
        plt.loglog(radii, formula_norms, "-", label="formula")
        plt.xlabel("radius r")
        plt.ylabel("Lipschitz seminorm of a fixed pair")
        plt.legend()
        plt.show()


if __name__ == "__main__":
    parser = ArgumentParser(description='Run the linking Dirac operator demo')
    parser.add_argument("--pairs", default=50, type=int, help='the number of random pairs per radius')
    parser.add_argument("--seed", default=0, type=int, help='the random seed')
    parser.add_argument("--visualise", default=True, type=bool, help='whether to visualise the result')
    config = parser.parse_args()

    run_linking_demo(pairs=config.pairs, seed=config.seed, visualise=config.visualise)
