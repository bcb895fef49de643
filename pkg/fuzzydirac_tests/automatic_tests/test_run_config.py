# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os
import tempfile
import unittest

from fuzzydirac.utils import Tags, Settings, RunConfig
from fuzzydirac.utils.exceptions import ConfigError


class TestSettings(unittest.TestCase):

    def test_type_check(self):
        settings = Settings()
        settings[Tags.LEVEL] = 3
        self.assertEqual(settings[Tags.LEVEL], 3)
        self.assertEqual(settings["n"], 3)
        self.assertIn(Tags.LEVEL, settings)
        with self.assertRaises(ValueError):
            settings[Tags.LEVEL] = 2.5
        with self.assertRaises(ValueError):
            settings[Tags.LEVEL] = True
        with self.assertRaises(TypeError):
            settings[3] = 1

    def test_missing_key(self):
        settings = Settings()
        with self.assertRaises(KeyError):
            _ = settings[Tags.BUDGET]
        self.assertIsNone(settings.get(Tags.BUDGET))
        settings[Tags.BUDGET] = 2
        del settings[Tags.BUDGET]
        self.assertNotIn(Tags.BUDGET, settings)


class TestRunConfig(unittest.TestCase):

    def setUp(self):
        self.config_file = tempfile.NamedTemporaryFile("w", suffix=".env", delete=False)
        self.config_file.write("# run configuration\nn = 4\nseed = 9\ntol_id = 1e-8\nrecord_runtime = yes\n")
        self.config_file.close()

    def tearDown(self):
        if os.path.exists(self.config_file.name):
            os.remove(self.config_file.name)

    def test_defaults(self):
        config = RunConfig({Tags.SUBCOMMAND: "spectrum"}).validate()
        self.assertEqual(config[Tags.RANDOM_SEED], 0)
        self.assertEqual(config[Tags.EMIT], "csv")
        self.assertEqual(config[Tags.THREADS], 1)
        self.assertFalse(config[Tags.RECORD_RUNTIME])

    def test_names_and_tags_are_both_accepted(self):
        config = RunConfig({"subcommand": "verify", Tags.LEVEL: 2, "samples": 4})
        self.assertEqual(config[Tags.SAMPLES], 4)
        self.assertEqual(config[Tags.LEVEL], 2)
        with self.assertRaises(ConfigError):
            RunConfig({"no_such_key": 1})
        with self.assertRaises(ConfigError):
            RunConfig({Tags.LEVEL: "three"})

    def test_config_file_and_overrides(self):
        config = RunConfig.from_file(self.config_file.name, {"subcommand": "spectrum", "seed": 1})
        self.assertEqual(config[Tags.LEVEL], 4)
        self.assertEqual(config[Tags.RANDOM_SEED], 1)
        self.assertEqual(config[Tags.TOLERANCE_IDENTITIES], 1e-8)
        self.assertTrue(config[Tags.RECORD_RUNTIME])

    def test_bad_config_files(self):
        for content in ("unknown = 1\n", "n = three\n", "n =\n", "demo = maybe\n"):
            with open(self.config_file.name, "w") as config_file:
                config_file.write(content)
            with self.assertRaises(ConfigError):
                RunConfig.read_config_file(self.config_file.name)

    def test_validation(self):
        with self.assertRaises(ConfigError):
            RunConfig().validate()
        with self.assertRaises(ConfigError):
            RunConfig({Tags.SUBCOMMAND: "unknown"}).validate()
        with self.assertRaises(ConfigError):
            RunConfig({Tags.SUBCOMMAND: "spectrum", Tags.SPINOR_SIGN: 0}).validate()
        with self.assertRaises(ConfigError):
            RunConfig({Tags.SUBCOMMAND: "spectrum", Tags.LEVEL: 0}).validate()
        with self.assertRaises(ConfigError):
            RunConfig({Tags.SUBCOMMAND: "converge", Tags.MAX_BRIDGE_LEVEL: 1}).validate()
        with self.assertRaises(ConfigError):
            RunConfig({Tags.SUBCOMMAND: "spectrum", Tags.EMIT: "hdf5"}).validate()
        with self.assertRaises(ConfigError):
            RunConfig({Tags.SUBCOMMAND: "linking", Tags.LINKING_RADIUS: -1.0}).validate()
        RunConfig({Tags.SUBCOMMAND: "spectrum", Tags.EMIT: "hdf5", Tags.OUTPUT_PATH: "out.hdf5"}).validate()

    def test_header(self):
        header = RunConfig({Tags.SUBCOMMAND: "irrep"}).header("1.0")
        self.assertEqual(list(header.keys()), ["program", "version", "subcommand", "seed", "tol_eig", "tol_id"])
        self.assertEqual(header["program"], "fuzzy-dirac")
        self.assertEqual(header["subcommand"], "irrep")
