# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os
import inspect
from pathlib import Path

from fuzzydirac.log import Logger
from fuzzydirac.utils.tags import Tags


class PathManager:
    """
    Locates the default run configuration file. The PathManager looks for a `fuzzydirac_config.env` file in the
    following places in this order:

        1. The optional path you give the PathManager (a file, or a folder containing the file)
        2. Your $HOME$ directory
        3. The current working directory
        4. The fuzzy-dirac home directory path

    A missing file is not an error: runs then use the built-in defaults.
    """

    def __init__(self, environment_path=None):
        self.logger = Logger()
        self.config_file_name = Tags.CONFIG_FILE_NAME
        if environment_path is None:
            environment_path = os.path.join(str(Path.home()), self.config_file_name)
            self.logger.debug(f"Using $HOME$ path to search for config file: {environment_path}")
            if not os.path.isfile(environment_path):
                environment_path = self.detect_local_config()
        elif not os.path.isfile(environment_path):
            self.logger.debug(f"Assuming a folder was given and looking for {self.config_file_name}")
            environment_path = os.path.join(environment_path, self.config_file_name)

        if environment_path is not None and not os.path.isfile(environment_path):
            environment_path = None
        if environment_path is None:
            self.logger.debug(f"No {self.config_file_name} found, using built-in defaults")
        self.environment_path = environment_path

    def detect_local_config(self):
        """
        Looks in the working directory and in the package home for a configuration file.
        """
        candidate = os.path.join(os.getcwd(), self.config_file_name)
        if os.path.isfile(candidate):
            self.logger.debug(f"Found {self.config_file_name} in current working directory: {candidate}")
            return candidate

        current_file_path = os.path.dirname(os.path.abspath(inspect.getfile(inspect.currentframe())))
        candidate = os.path.join(current_file_path, "..", "..", self.config_file_name)
        if os.path.isfile(candidate):
            self.logger.debug(f"Found {self.config_file_name} in the package home: {candidate}")
            return candidate
        return None

    def get_config_file_path(self):
        return self.environment_path

    def get_output_directory(self):
        """
        :return: the directory from the FUZZY_DIRAC_SAVE_PATH environment variable, else the working directory
        """
        path = os.environ.get(Tags.FUZZY_DIRAC_SAVE_DIRECTORY_VARNAME)
        if path is None:
            path = os.getcwd()
        self.logger.debug(f"Retrieved output directory {path}")
        return path
