# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import inspect
import numpy as np


def assert_equal_shapes(arrays: list):
    """
    Raises an AssertionError if the shapes of the given arrays do not all match.

    :param arrays: a list of np.ndarray
    :raises AssertionError: if there is a mismatch between any of the shapes.
    """
    if len(arrays) < 2:
        return
    shapes = {np.shape(_arr) for _arr in arrays}
    if len(shapes) > 1:
        raise AssertionError(f"The given arrays did not all have the same shape: {sorted(shapes)}. "
                             f"Called from {inspect.stack()[1].function}")


def assert_square_matrix(array: np.ndarray, array_name: str = None):
    """
    Raises an AssertionError if the given array is not a two dimensional square matrix.

    :param array: the array to test
    :param array_name: a string that gives more information in case of an error.
    """
    if np.ndim(array) != 2 or np.shape(array)[0] != np.shape(array)[1]:
        if array_name is None:
            array_name = "'Not specified'"
        raise AssertionError(f"The array {array_name} is not a square matrix, its shape is {np.shape(array)}.")


def assert_array_well_defined(array: np.ndarray, assume_non_negativity: bool = False,
                              assume_positivity=False, array_name: str = None):
    """
    This method tests if all entries of the given array are well-defined (i.e. not np.inf, np.nan, or None).
    Complex arrays are checked on real and imaginary parts; the sign assumptions apply to real arrays only.

    :param array: The input np.ndarray
    :param assume_non_negativity: bool (default: False). If true, all values must be greater than or equal to 0.
    :param assume_positivity: bool (default: False). If true, all values must be greater than 0.
    :param array_name: a string that gives more information in case of an error.
    :raises AssertionError: if there are any unexpected values in the given array.
    """
    error_message = None
    array = np.asarray(array)
    if array.dtype == object or not np.all(np.isfinite(array)):
        error_message = "nan, inf or -inf"
    elif not np.iscomplexobj(array):
        if assume_positivity and np.any(array <= 0):
            error_message = "not positive"
        if assume_non_negativity and np.any(array < 0):
            error_message = "negative"
    if error_message:
        if array_name is None:
            array_name = "'Not specified'"
        caller = inspect.stack()[1]
        stack_string = f" \n\tArray Name: {array_name} \n\tCaller: {caller.filename}" \
                       f" \n\tline: {caller.lineno} \n\tcode: {caller.code_context}"
        raise AssertionError(f"The given array contained values that were {error_message}."
                             f" Info: {stack_string}.")
