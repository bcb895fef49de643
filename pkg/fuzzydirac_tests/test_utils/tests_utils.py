# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import numpy as np
import pandas as pd


def assert_equals_recursive(a, b):
    if isinstance(a, dict):
        assert isinstance(b, dict), f"{b} is not a dictionary"
        assert set(a.keys()) == set(b.keys()), f"Keys differ: {sorted(a.keys())} vs {sorted(b.keys())}"
        for item in a:
            assert_equals_recursive(a[item], b[item])
    elif isinstance(a, (list, tuple)):
        assert len(a) == len(b), f"{a} and {b} differ in length"
        for item1, item2 in zip(a, b):
            assert_equals_recursive(item1, item2)
    elif isinstance(a, np.ndarray):
        assert np.allclose(a, b, rtol=0, atol=0), f"{a} is not the same as {b}"
    elif isinstance(a, float) and np.isnan(a):
        assert isinstance(b, float) and np.isnan(b), f"{b} is not nan"
    else:
        assert a == b, str(a) + " is not the same as " + str(b)


def assert_results_equal(a, b):
    """
    Compares two SuiteResults column by column.
    """
    assert a.name == b.name, f"{a.name} is not the same as {b.name}"
    assert list(a.table.columns) == list(b.table.columns)
    pd.testing.assert_frame_equal(a.table.reset_index(drop=True), b.table.reset_index(drop=True),
                                  check_dtype=False)
    assert_equals_recursive([list(check) for check in a.checks], [list(check) for check in b.checks])
    assert_equals_recursive(a.extras, b.extras)
