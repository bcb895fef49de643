# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from numbers import Number


class Tags:
    """
    This class contains all 'Tags' for the use in the run configuration as well as strings that are used in
    fuzzy-dirac as naming conventions.
    Every Tag that is intended to be used as a key in a Settings dictionary is represented by a tuple.
    The first element of the tuple is a string that corresponds to the name of the Tag. It is also the key that is
    accepted in a flat configuration file and, with underscores replaced by dashes, the command line flag.
    The second element of the tuple is a data type or a tuple of data types.
    The values that are assigned to the keys in the settings should match these data types.
    """

    """
    General run settings
    """

    SUBCOMMAND = ("subcommand", str)
    """
    Name of the suite that is run: spectrum, verify, seminorm, symbol, bridge, converge, linking or irrep.\n
    Usage: cli
    """

    RANDOM_SEED = ("seed", int)
    """
    Seed of every random stream of a run. Restart i of an ascent draws from default_rng([seed, i]).\n
    Usage: fuzzy-dirac package
    """

    TOLERANCE_EIGENVALUES = ("tol_eig", Number)
    """
    Maximal deviation of a computed eigenvalue from its closed form.\n
    Usage: spectrum suite
    """

    TOLERANCE_IDENTITIES = ("tol_id", Number)
    """
    Maximal residual of an operator identity.\n
    Usage: verify suite
    """

    EMIT = ("emit", str)
    """
    Output format of the result table: csv, json or hdf5.\n
    Usage: cli
    """

    OUTPUT_PATH = ("out", str)
    """
    File the result table is written to. Without it csv and json are written to stdout.\n
    Usage: cli
    """

    THREADS = ("threads", int)
    """
    Number of worker threads used for independent levels.\n
    Usage: converge suite
    """

    RECORD_RUNTIME = ("record_runtime", bool)
    """
    If True, wall-clock runtimes are written into the result tables (they are not reproducible).\n
    Usage: converge and bridge suites
    """

    """
    Model settings
    """

    LEVEL = ("n", int)
    """
    Level n of the matrix algebra B^n = M_{n+1}(C).\n
    Usage: spectrum, verify, seminorm, symbol and irrep suites
    """

    SPINOR_SIGN = ("sign", int)
    """
    Chirality sign of the three dimensional spinor representation, -1 or +1.\n
    Usage: spectrum, verify and seminorm suites
    """

    BRIDGE_LEVEL = ("m", int)
    """
    Level m of the matrix side of a bridge.\n
    Usage: bridge suite
    """

    MAX_BRIDGE_LEVEL = ("m_max", int)
    """
    Largest level of a convergence study, which runs m = 1, ..., m_max.\n
    Usage: converge suite
    """

    BUDGET = ("budget", int)
    """
    Budget of the nonsmooth ascents, each unit buys three restarts.\n
    Usage: bridge and converge suites
    """

    WORK_LEVEL_OFFSET = ("work_level_offset", int)
    """
    The band-limited model of C(S^2) used on the function side sits at level m + offset.\n
    Usage: bridge and converge suites
    """

    GRID_RESOLUTION = ("grid", int)
    """
    Number of polar grid lines of a sphere grid; the azimuthal direction uses twice as many.\n
    Usage: symbol suite
    """

    SAMPLES = ("samples", int)
    """
    Number of random inputs.\n
    Usage: seminorm and verify suites
    """

    MATRIX_PATH = ("matrix", str)
    """
    Path to a matrix in the JSON matrix encoding.\n
    Usage: symbol and seminorm suites
    """

    LINKING_RADIUS = ("r", Number)
    """
    Length parameter r of the linking operator D_r.\n
    Usage: linking suite
    """

    DEMO = ("demo", bool)
    """
    Run the built-in example instead of reading operators from files.\n
    Usage: linking suite
    """

    """
    Naming conventions
    """

    FUZZY_DIRAC_SAVE_DIRECTORY_VARNAME = "FUZZY_DIRAC_SAVE_PATH"
    """
    Environment variable holding the default directory for result files.\n
    Usage: naming convention
    """

    CONFIG_FILE_NAME = "fuzzydirac_config.env"
    """
    Name of the default configuration file.\n
    Usage: naming convention
    """

    SUBCOMMANDS = ("spectrum", "verify", "seminorm", "symbol", "bridge", "converge", "linking", "irrep")
    """
    All suites known to the command line interface.\n
    Usage: naming convention
    """

    EMIT_FORMATS = ("csv", "json", "hdf5")
    """
    All output formats.\n
    Usage: naming convention
    """

    @classmethod
    def configuration_tags(cls) -> dict:
        """
        :return: all tuple-valued tags keyed by their name
        """
        return {value[0]: value for value in vars(cls).values()
                if isinstance(value, tuple) and len(value) == 2 and isinstance(value[0], str)
                and not isinstance(value[1], str)}
