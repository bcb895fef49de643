# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Domain errors. Each one derives from the built-in exception for its kind of problem: ValueError for bad input,
AssertionError for a failed check and ArithmeticError for a numerical failure.
"""


class NotHermitian(ValueError):
    pass


class NotSkewHermitian(ValueError):
    pass


class NotSelfAdjoint(ValueError):
    """Raised when a function on the sphere or a matrix that should be self-adjoint is not."""
    pass


class NotGroupElement(ValueError):
    pass


class NotSU2(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class DegreeOverflow(ValueError):
    """The quadrature grid is not exact for the requested polynomial degree."""
    pass


class BadPivot(ValueError):
    pass


class BandTooSmall(ValueError):
    pass


class ConfigError(ValueError):
    pass


class NoConvergence(ArithmeticError):
    pass


class DegenerateSpectrum(ArithmeticError):
    pass


class SpectrumMismatch(AssertionError):
    pass


class SectorNotScalar(AssertionError):
    pass


class SuiteFailure(AssertionError):
    """
    Raised by a suite whose residual checks did not all pass.

    :param msg: the message
    :param failures: list of (check name, residual, tolerance) tuples that failed
    """

    def __init__(self, msg, failures=None):
        super().__init__(msg)
        self.failures = list(failures) if failures is not None else []
