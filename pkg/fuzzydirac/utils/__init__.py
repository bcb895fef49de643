# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from .tags import Tags
from .settings import Settings
from .run_config import RunConfig
from .path_manager import PathManager
from .exceptions import *
