# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Command line interface: fuzzy-dirac <subcommand> [options]. Values are taken from the built-in defaults, then from
the configuration file (--config, else the fuzzydirac_config.env found by the PathManager), then from the flags.
"""

import logging
import sys
from argparse import ArgumentParser, SUPPRESS

from fuzzydirac.core.run import run, EXIT_CONFIG_ERROR
from fuzzydirac.log import Logger
from fuzzydirac.utils import Tags, RunConfig, PathManager
from fuzzydirac.utils.exceptions import ConfigError


def _common_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False, argument_default=SUPPRESS)
    parser.add_argument("--seed", type=int, help="seed of every random stream")
    parser.add_argument("--tol-eig", type=float, help="tolerance of the eigenvalue checks")
    parser.add_argument("--tol-id", type=float, help="tolerance of the identity checks")
    parser.add_argument("--emit", choices=Tags.EMIT_FORMATS, help="output format")
    parser.add_argument("--out", help="output file, stdout for csv and json if omitted")
    parser.add_argument("--threads", type=int, help="worker threads for independent levels")
    parser.add_argument("--config", help="flat key = value configuration file")
    parser.add_argument("--record-runtime", action="store_true", help="write wall-clock runtimes")
    parser.add_argument("--verbose", action="store_true", help="log debug output to the console")
    return parser


def build_parser() -> ArgumentParser:
    common = _common_parser()
    parser = ArgumentParser(prog="fuzzy-dirac", parents=[common],
                            description="Dirac operators on the fuzzy sphere and their convergence to S^2.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help_text):
        return subparsers.add_parser(name, parents=[common], help=help_text, argument_default=SUPPRESS)

    spectrum = add("spectrum", "spectrum of the shifted Dirac operator against the closed form")
    spectrum.add_argument("--n", type=int)
    spectrum.add_argument("--sign", type=int, choices=(-1, 1))

    verify = add("verify", "residuals of every algebraic identity")
    verify.add_argument("--n", type=int)
    verify.add_argument("--sign", type=int, choices=(-1, 1))
    verify.add_argument("--samples", type=int)

    seminorm = add("seminorm", "L^D, L_d and L_l on random self-adjoint inputs")
    seminorm.add_argument("--n", type=int)
    seminorm.add_argument("--samples", type=int)
    seminorm.add_argument("--matrix")

    symbol = add("symbol", "covariant symbol and gradient norm on a polar grid")
    symbol.add_argument("--n", type=int)
    symbol.add_argument("--matrix")
    symbol.add_argument("--grid", type=int)

    bridge = add("bridge", "reach, height and Berezin quantities of the bridge at level m")
    bridge.add_argument("--m", type=int)
    bridge.add_argument("--budget", type=int)
    bridge.add_argument("--work-level-offset", type=int)

    converge = add("converge", "bridge reports for m = 1, ..., m_max")
    converge.add_argument("--m-max", type=int)
    converge.add_argument("--budget", type=int)
    converge.add_argument("--work-level-offset", type=int)

    linking = add("linking", "commutator norm identity of the linking Dirac operator")
    linking.add_argument("--demo", action="store_true")
    linking.add_argument("--r", type=float)

    irrep = add("irrep", "generators and highest weight projector of an irrep")
    irrep.add_argument("--n", type=int)
    return parser


def config_from_arguments(arguments: dict) -> RunConfig:
    """
    :param arguments: parsed flags, keyed by argparse destination
    :raises ConfigError: on unknown keys or invalid values
    """
    arguments = dict(arguments)
    arguments.pop("verbose", None)
    config_path = arguments.pop("config", None)
    if config_path is None:
        config_path = PathManager().get_config_file_path()
    overrides = {key: value for key, value in arguments.items()}
    if config_path is not None:
        return RunConfig.from_file(config_path, overrides)
    return RunConfig(overrides)


def main(argv=None) -> int:
    arguments = vars(build_parser().parse_args(argv))
    logger = Logger()
    if arguments.get("verbose"):
        logger.set_console_level(logging.DEBUG)
    try:
        config = config_from_arguments(arguments)
    except ConfigError as error:
        logger.error(f"Invalid configuration: {error}")
        return EXIT_CONFIG_ERROR
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
