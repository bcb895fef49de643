# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from .utils import *
from .log import Logger
from importlib.metadata import version, PackageNotFoundError


try:
    __version__ = version("fuzzy-dirac")
except PackageNotFoundError:
    __version__ = "unknown version"

from .core.lie_algebra import su2_basis, irrep, derivation, conjugation, GroupElement, isotypic_decomposition
from .core.clifford import clifford_gammas, clifford_norm, charge_conj_3d
from .core.fuzzy_dirac import build_dirac, spectrum, lip_seminorm, ld_seminorm, lell_estimate
from .core.sphere_model import group_point, quadrature_grid, symbol_covariant, evaluate, grad_norm, cont_seminorm
from .core.bridge import berezin_map, bridge_norm, reach_estimate, height_estimate, convergence_study, \
    linking_dirac, tunnel_maps

from .io_handling import load_hdf5, save_hdf5, load_matrix, save_matrix

from .utils.quality_assurance.data_sanity_testing import assert_equal_shapes
from .utils.quality_assurance.data_sanity_testing import assert_array_well_defined
