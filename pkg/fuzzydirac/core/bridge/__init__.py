# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from .symbols import symbol_contravariant, symbol_embedding, berezin_eigenvalue, berezin_map, BerezinSpectrum
from .ascent import hermitian_ascent, multistart_ascent, AscentResult
from .bridge import Bridge, make_bridge, bridge_norm, reach_estimate, height_estimate, bridge_report, \
    convergence_study, BridgeReport, ConvergenceStudy
from .linking import LinkingOperator, linking_dirac, linking_demo
from .tunnel import TunnelMaps, TunnelDiagnostics, tunnel_maps, tunnel_norm, graph_norm
