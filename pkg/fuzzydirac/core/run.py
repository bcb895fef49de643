# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os
import time
from typing import TextIO

from fuzzydirac.core.suites.bridge import BridgeSuite
from fuzzydirac.core.suites.converge import ConvergeSuite
from fuzzydirac.core.suites.irrep import IrrepSuite
from fuzzydirac.core.suites.linking import LinkingSuite
from fuzzydirac.core.suites.seminorm import SeminormSuite
from fuzzydirac.core.suites.spectrum import SpectrumSuite
from fuzzydirac.core.suites.symbol import SymbolSuite
from fuzzydirac.core.suites.verify import VerifySuite
from fuzzydirac.io_handling.emission import emit_result
from fuzzydirac.log import Logger
from fuzzydirac.utils import Tags, RunConfig, PathManager
from fuzzydirac.utils.exceptions import ConfigError, SuiteFailure, SpectrumMismatch, SectorNotScalar

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2

SUITES = {suite.name: suite for suite in (SpectrumSuite, VerifySuite, SeminormSuite, SymbolSuite, BridgeSuite,
                                          ConvergeSuite, LinkingSuite, IrrepSuite)}


def _version() -> str:
    from fuzzydirac import __version__
    return __version__


def run(config: RunConfig, stream: TextIO = None) -> int:
    """
    Runs the suite selected in the configuration and writes its result table.

    :param config: the run configuration
    :param stream: text stream for csv and json output without --out (stdout by default)
    :return: 0 if every check passed, 1 if a suite failed, 2 for an invalid configuration or input
    """
    start_time = time.time()
    logger = Logger()
    try:
        config.validate()
        subcommand = config[Tags.SUBCOMMAND]
        out = config.get(Tags.OUTPUT_PATH)
        if out is not None and not os.path.isabs(out):
            out = os.path.join(PathManager().get_output_directory(), out)
        logger.info(f"Running the {subcommand} suite...")
        result = SUITES[subcommand](config).run()
        emit_result(result, config.header(_version()), config[Tags.EMIT], out, stream)
    except ConfigError as error:
        logger.error(f"Invalid configuration: {error}")
        return EXIT_CONFIG_ERROR
    except (SuiteFailure, SpectrumMismatch, SectorNotScalar) as error:
        logger.error(f"Suite failed: {error}")
        return EXIT_FAILURE
    except ValueError as error:
        logger.error(f"Invalid input: {error}")
        return EXIT_CONFIG_ERROR

    failures = result.failures
    if failures:
        for name, value, tolerance in failures:
            logger.error(f"Check '{name}' failed: {value} (tolerance {tolerance})")
        return EXIT_FAILURE
    logger.info(f"Running the {subcommand} suite...[Done] in {time.time() - start_time:.2f} seconds")
    return EXIT_SUCCESS
