# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import pandas as pd

from fuzzydirac.core.lie_algebra import irrep, casimir_image
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.io_handling.matrix_json import matrix_to_dict
from fuzzydirac.utils import Tags
from fuzzydirac.utils.numlin import identity, op_norm, is_skew_hermitian


class IrrepSuite(SuiteBase):
    """
    The generators, ladder operators and highest weight projector of the irrep of highest weight n.
    """

    name = "irrep"

    def run(self) -> SuiteResult:
        n = self.global_settings[Tags.LEVEL]
        tolerance = float(self.global_settings[Tags.TOLERANCE_IDENTITIES])
        rep = irrep(n)
        matrices = {"U_E1": rep.generators[0], "U_E2": rep.generators[1], "U_E3": rep.generators[2],
                    "H": rep.ladder_h, "E": rep.ladder_e, "F": rep.ladder_f, "P": rep.highest_projector}
        table = pd.DataFrame([{"matrix": name, "rows": matrix.shape[0], "cols": matrix.shape[1],
                               "norm": op_norm(matrix)} for name, matrix in matrices.items()],
                             columns=["matrix", "rows", "cols", "norm"])
        casimir = casimir_image(rep)
        checks = [
            ("casimir_scalar", op_norm(casimir + n * (n + 2) * identity(n + 1)), tolerance),
            ("commutation", rep.commutation_residual(), tolerance),
            ("skew_hermitian_generators", all(is_skew_hermitian(u) for u in rep.generators), None),
        ]
        extras = {"n": n,
                  "generators": [matrix_to_dict(u) for u in rep.generators],
                  "ladders": {name: matrix_to_dict(matrices[name]) for name in ("H", "E", "F")},
                  "highest_projector": matrix_to_dict(rep.highest_projector),
                  "casimir": matrix_to_dict(casimir)}
        return SuiteResult(self.name, table, checks, extras)
