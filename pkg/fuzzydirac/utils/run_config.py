# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os
from numbers import Number

from dotenv import dotenv_values

from fuzzydirac.log import Logger
from fuzzydirac.utils.constants import TOL_IDENTITY, TOL_SPECTRUM, DEFAULT_WORK_LEVEL_OFFSET
from fuzzydirac.utils.exceptions import ConfigError
from fuzzydirac.utils.settings import Settings
from fuzzydirac.utils.tags import Tags

DEFAULTS = {
    Tags.RANDOM_SEED: 0,
    Tags.TOLERANCE_EIGENVALUES: TOL_SPECTRUM,
    Tags.TOLERANCE_IDENTITIES: TOL_IDENTITY,
    Tags.EMIT: "csv",
    Tags.THREADS: 1,
    Tags.RECORD_RUNTIME: False,
    Tags.LEVEL: 3,
    Tags.SPINOR_SIGN: -1,
    Tags.BRIDGE_LEVEL: 2,
    Tags.MAX_BRIDGE_LEVEL: 6,
    Tags.BUDGET: 1,
    Tags.WORK_LEVEL_OFFSET: DEFAULT_WORK_LEVEL_OFFSET,
    Tags.GRID_RESOLUTION: 16,
    Tags.SAMPLES: 8,
    Tags.LINKING_RADIUS: 1.0,
    Tags.DEMO: False,
}

_TRUE_STRINGS = {"1", "true", "yes", "on"}
_FALSE_STRINGS = {"0", "false", "no", "off"}


def _convert(tag, raw: str):
    """
    Converts a string from a configuration file into the type of the given tag.
    """
    types = tag[1] if isinstance(tag[1], tuple) else (tag[1],)
    text = raw.strip()
    try:
        if bool in types:
            if text.lower() in _TRUE_STRINGS:
                return True
            if text.lower() in _FALSE_STRINGS:
                return False
            raise ValueError(text)
        if int in types:
            return int(text)
        if Number in types or float in types:
            return float(text)
        return text
    except ValueError:
        raise ConfigError(f"The value '{raw}' of '{tag[0]}' cannot be read as {tag[1]}") from None


class RunConfig(Settings):
    """
    The configuration of one command line run. Defaults are filled in on construction; values from a flat
    'key = value' configuration file override them and command line values override both. \n
    Usage: RunConfig({Tags.SUBCOMMAND: "spectrum", Tags.LEVEL: 4}).validate()
    """

    def __init__(self, dictionary: dict = None, verbose: bool = False):
        super(RunConfig, self).__init__(None, verbose=verbose)
        for key, value in DEFAULTS.items():
            self[key] = value
        if dictionary is not None:
            self.update_from(dictionary)

    def __setitem__(self, key, value):
        try:
            super().__setitem__(key, value)
        except ValueError as error:
            self.logger.critical(str(error))
            raise ConfigError(str(error)) from None

    def update_from(self, dictionary: dict):
        """
        Copies all entries of the dictionary that are not None. Keys can be Tags or tag names.

        :param dictionary: mapping of Tags (or tag names) to values
        :raises ConfigError: if a key is unknown or a value has the wrong type
        """
        known = Tags.configuration_tags()
        for key, value in dictionary.items():
            if value is None:
                continue
            if isinstance(key, str):
                if key not in known:
                    msg = f"Unknown configuration key '{key}'"
                    self.logger.critical(msg)
                    raise ConfigError(msg)
                key = known[key]
            self[key] = value
        return self

    @staticmethod
    def read_config_file(path: str) -> dict:
        """
        Reads a flat 'key = value' configuration file.

        :param path: path to the file
        :return: dictionary mapping Tags to typed values
        :raises ConfigError: on unknown keys, empty values or values that cannot be converted
        """
        logger = Logger()
        logger.debug(f"Reading configuration file {path}")
        if not os.path.isfile(path):
            msg = f"The configuration file {path} does not exist"
            logger.critical(msg)
            raise ConfigError(msg)
        known = Tags.configuration_tags()
        entries = {}
        for key, raw in dotenv_values(path).items():
            if key not in known:
                msg = f"Unknown configuration key '{key}' in {path}"
                logger.critical(msg)
                raise ConfigError(msg)
            if raw is None or raw.strip() == "":
                msg = f"The configuration key '{key}' in {path} has no value"
                logger.critical(msg)
                raise ConfigError(msg)
            entries[known[key]] = _convert(known[key], raw)
        return entries

    @classmethod
    def from_file(cls, path: str, overrides: dict = None):
        config = cls(cls.read_config_file(path))
        if overrides is not None:
            config.update_from(overrides)
        return config

    def validate(self):
        """
        Checks value ranges.

        :return: self
        :raises ConfigError: if any value is out of range
        """
        problems = []
        if Tags.SUBCOMMAND not in self:
            problems.append("no subcommand given")
        elif self[Tags.SUBCOMMAND] not in Tags.SUBCOMMANDS:
            problems.append(f"unknown subcommand '{self[Tags.SUBCOMMAND]}'")
        if self[Tags.EMIT] not in Tags.EMIT_FORMATS:
            problems.append(f"unknown output format '{self[Tags.EMIT]}'")
        if self[Tags.SPINOR_SIGN] not in (-1, 1):
            problems.append("sign must be -1 or +1")
        for tag in (Tags.LEVEL, Tags.BRIDGE_LEVEL, Tags.MAX_BRIDGE_LEVEL, Tags.BUDGET, Tags.THREADS,
                    Tags.SAMPLES, Tags.WORK_LEVEL_OFFSET):
            if self[tag] < 1:
                problems.append(f"{tag[0]} must be positive, got {self[tag]}")
        if self.get(Tags.SUBCOMMAND) == "converge" and self[Tags.MAX_BRIDGE_LEVEL] < 2:
            problems.append(f"a convergence study needs m_max >= 2, got {self[Tags.MAX_BRIDGE_LEVEL]}")
        if self[Tags.GRID_RESOLUTION] < 2:
            problems.append(f"grid must be at least 2, got {self[Tags.GRID_RESOLUTION]}")
        if self[Tags.RANDOM_SEED] < 0:
            problems.append("seed must be non-negative")
        for tag in (Tags.TOLERANCE_EIGENVALUES, Tags.TOLERANCE_IDENTITIES, Tags.LINKING_RADIUS):
            if not self[tag] > 0:
                problems.append(f"{tag[0]} must be positive, got {self[tag]}")
        if self[Tags.EMIT] == "hdf5" and Tags.OUTPUT_PATH not in self:
            problems.append("hdf5 output needs --out")
        if problems:
            msg = "Invalid configuration: " + "; ".join(problems)
            self.logger.critical(msg)
            raise ConfigError(msg)
        return self

    def header(self, version: str) -> dict:
        """
        :return: the run header written in front of every result table
        """
        return {
            "program": "fuzzy-dirac",
            "version": version,
            "subcommand": self.get(Tags.SUBCOMMAND),
            "seed": self[Tags.RANDOM_SEED],
            "tol_eig": float(self[Tags.TOLERANCE_EIGENVALUES]),
            "tol_id": float(self[Tags.TOLERANCE_IDENTITIES]),
        }

    def serialize(self):
        return {"RunConfig": dict(self)}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        return RunConfig(dictionary_to_deserialize)
