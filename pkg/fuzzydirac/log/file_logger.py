# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import logging
from pathlib import Path
import sys
from fuzzydirac.utils.serializer import SerializableFuzzyDiracClass


class Logger(SerializableFuzzyDiracClass):
    """
    The fuzzy-dirac Logger.
    Guarantees that the logging configuration is set exactly once and that every operation of a run writes to the
    same log file. Per default, the log file is located in the home directory as defined by Path.home().

    Console output goes to stderr, so that tables emitted by the command line interface on stdout are never mixed
    with log lines.

    The log levels are the ones of the python logging module:
    DEBUG: sizes, tolerances, grid resolutions and residuals.
    INFO: start and end of a suite or an estimate.
    WARNING: a non-provable trend check failed; the run continues.
    ERROR: a suite could not produce a result.
    CRITICAL: logged right before a domain error is raised.
    """
    _instance = None
    _formatter = logging.Formatter('%(asctime)s - %(levelname)s - %(message)s')
    _default_logging_path = str(Path.home()) + "/fuzzydirac.log"
    _logger = None

    def __new__(cls, path=None, force_new_instance=False, startup_verbose=False, console_level=logging.INFO):
        # singleton
        if cls._instance is None or force_new_instance:
            cls._instance = super(Logger, cls).__new__(cls)

            if path is None:
                path = cls._default_logging_path

            cls._logger = logging.getLogger("fuzzy-dirac Logger")
            cls._logger.setLevel(logging.DEBUG)
            for handler in list(cls._logger.handlers):
                cls._logger.removeHandler(handler)
                handler.close()

            console_handler = logging.StreamHandler(stream=sys.stderr)
            file_handler = logging.FileHandler(path, mode="w")

            console_handler.setLevel(console_level)
            file_handler.setLevel(logging.DEBUG)

            console_handler.setFormatter(cls._formatter)
            file_handler.setFormatter(cls._formatter)

            cls._logger.addHandler(console_handler)
            cls._logger.addHandler(file_handler)

            if startup_verbose:
                cls._logger.debug("###########################")
                cls._logger.debug("NEW FUZZY-DIRAC RUN STARTED")
                cls._logger.debug("###########################")

        return cls._instance

    def set_console_level(self, level):
        """
        Changes the level of the console handler, e.g. to silence INFO output of the command line interface.

        :param level: a level of the logging module
        """
        for handler in self._logger.handlers:
            if not isinstance(handler, logging.FileHandler):
                handler.setLevel(level)

    def debug(self, msg):
        """
        Logs a debug message to the logging system.

        :param msg: the message to log
        """
        self._logger.debug(msg)

    def info(self, msg):
        """
        Logs an info message to the logging system.

        :param msg: the message to log
        """
        self._logger.info(msg)

    def warning(self, msg):
        """
        Logs a warning message to the logging system.

        :param msg: the message to log
        """
        self._logger.warning(msg)

    def error(self, msg):
        self._logger.error(msg)

    def critical(self, msg):
        """
        Logs a critical message to the logging system. Every domain error is announced this way before it is raised.

        :param msg: the message to log
        """
        self._logger.critical(msg)

    def serialize(self) -> dict:
        return {"Logger": {"Logger": 1}}

    @staticmethod
    def deserialize(dictionary_to_deserialize):
        return Logger()
