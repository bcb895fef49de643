# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from fuzzydirac.io_handling.io_hdf5 import load_hdf5
from fuzzydirac.io_handling.io_hdf5 import save_hdf5
from fuzzydirac.io_handling.matrix_json import load_matrix
from fuzzydirac.io_handling.matrix_json import save_matrix
from fuzzydirac.io_handling.emission import emit_result
