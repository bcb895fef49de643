# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

import numpy as np
import pandas as pd

from fuzzydirac.cli import main, build_parser, config_from_arguments
from fuzzydirac.core.run import EXIT_SUCCESS, EXIT_FAILURE, EXIT_CONFIG_ERROR
from fuzzydirac.io_handling import load_hdf5, save_matrix
from fuzzydirac.utils import Tags


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory, ignore_errors=True)

    def path(self, name):
        return os.path.join(self.directory, name)

    def read_table(self, name):
        return pd.read_csv(self.path(name), comment="#")

    def test_parser_only_keeps_given_flags(self):
        arguments = vars(build_parser().parse_args(["bridge", "--m", "2", "--work-level-offset", "3"]))
        self.assertEqual(arguments, {"subcommand": "bridge", "m": 2, "work_level_offset": 3})
        config = config_from_arguments({**arguments, "config": None})
        self.assertEqual(config[Tags.BRIDGE_LEVEL], 2)
        self.assertEqual(config[Tags.BUDGET], 1)

    def test_spectrum(self):
        self.assertEqual(main(["spectrum", "--n", "2", "--out", self.path("spectrum.csv")]), EXIT_SUCCESS)
        table = self.read_table("spectrum.csv")
        self.assertEqual(list(table.columns),
                         ["eigenvalue", "multiplicity", "predicted", "deviation", "mirror_multiplicity"])
        self.assertTrue((table["mirror_multiplicity"] != table["multiplicity"]).any())
        self.assertEqual(int(table["multiplicity"].sum()), 18)
        self.assertTrue(np.allclose(table["eigenvalue"], table["predicted"], atol=1e-9))

    def test_spectrum_to_stdout(self):
        stream = io.StringIO()
        with contextlib.redirect_stdout(stream):
            self.assertEqual(main(["spectrum", "--n", "1", "--seed", "4"]), EXIT_SUCCESS)
        lines = stream.getvalue().split("\n")
        self.assertEqual(lines[0], "# program: fuzzy-dirac")
        self.assertIn("# seed: 4", lines)

    def test_same_seed_gives_identical_output(self):
        outputs = []
        for _ in range(2):
            stream = io.StringIO()
            with contextlib.redirect_stdout(stream):
                self.assertEqual(main(["seminorm", "--n", "2", "--samples", "2", "--seed", "11"]), EXIT_SUCCESS)
            outputs.append(stream.getvalue())
        self.assertEqual(outputs[0].encode(), outputs[1].encode())
        self.assertIn("# seed: 11", outputs[0].split("\n"))

    def test_spectrum_mismatch_fails(self):
        self.assertEqual(main(["spectrum", "--n", "3", "--tol-eig", "1e-300", "--out", self.path("s.csv")]),
                         EXIT_FAILURE)

    def test_verify(self):
        self.assertEqual(main(["verify", "--n", "1", "--samples", "2", "--emit", "json",
                               "--out", self.path("verify.json")]), EXIT_SUCCESS)
        with open(self.path("verify.json")) as result_file:
            document = json.load(result_file)
        self.assertEqual(len(document["rows"]), 17)
        self.assertTrue(all(row["passed"] for row in document["rows"]))

    def test_seminorm_with_matrix_file(self):
        save_matrix(self.path("a.json"), np.diag([1.0, -1.0]))
        self.assertEqual(main(["seminorm", "--n", "1", "--matrix", self.path("a.json"),
                               "--out", self.path("seminorm.csv")]), EXIT_SUCCESS)
        table = self.read_table("seminorm.csv")
        self.assertEqual(len(table), 1)
        self.assertAlmostEqual(table["lip_minus"][0], 4.0, places=8)
        self.assertAlmostEqual(table["l_d"][0], 2.0, places=6)

    def test_matrix_of_wrong_size(self):
        save_matrix(self.path("a.json"), np.eye(3))
        self.assertEqual(main(["symbol", "--n", "1", "--matrix", self.path("a.json"),
                               "--out", self.path("symbol.csv")]), EXIT_CONFIG_ERROR)

    def test_symbol(self):
        save_matrix(self.path("a.json"), np.diag([1.0, -1.0]))
        self.assertEqual(main(["symbol", "--n", "1", "--grid", "4", "--matrix", self.path("a.json"),
                               "--out", self.path("symbol.csv")]), EXIT_SUCCESS)
        table = self.read_table("symbol.csv")
        self.assertEqual(len(table), 32)
        self.assertTrue(np.allclose(table["f"], np.cos(table["theta"]), atol=1e-10))

    def test_irrep(self):
        self.assertEqual(main(["irrep", "--n", "2", "--emit", "json", "--out", self.path("irrep.json")]),
                         EXIT_SUCCESS)
        with open(self.path("irrep.json")) as result_file:
            document = json.load(result_file)
        self.assertEqual(len(document["generators"]), 3)
        self.assertEqual(document["highest_projector"]["data"][0], [1.0, 0.0])
        self.assertEqual(document["casimir"]["rows"], 3)

    def test_linking(self):
        self.assertEqual(main(["linking", "--out", self.path("linking.csv")]), EXIT_CONFIG_ERROR)
        self.assertEqual(main(["linking", "--demo", "--r", "2.0", "--out", self.path("linking.csv")]),
                         EXIT_SUCCESS)
        self.assertEqual(len(self.read_table("linking.csv")), 50)

    def test_bridge_hdf5(self):
        self.assertEqual(main(["bridge", "--m", "1", "--emit", "hdf5", "--out", self.path("bridge.hdf5")]),
                         EXIT_SUCCESS)
        result = load_hdf5(self.path("bridge.hdf5"))["result"]
        self.assertEqual(result.name, "bridge")
        self.assertAlmostEqual(result.table["gap"][0], 2.0 / 3.0, places=10)
        self.assertTrue(pd.isna(result.table["runtime_ms"][0]))

    def test_invalid_configurations(self):
        self.assertEqual(main(["converge", "--m-max", "1"]), EXIT_CONFIG_ERROR)
        self.assertEqual(main(["spectrum", "--emit", "hdf5"]), EXIT_CONFIG_ERROR)
        self.assertEqual(main(["spectrum", "--config", "/path/to/nowhere.env"]), EXIT_CONFIG_ERROR)

    def test_config_file(self):
        with open(self.path("run.env"), "w") as config_file:
            config_file.write("n = 1\nemit = json\n")
        self.assertEqual(main(["spectrum", "--config", self.path("run.env"), "--out", self.path("s.json")]),
                         EXIT_SUCCESS)
        with open(self.path("s.json")) as result_file:
            self.assertEqual(len(json.load(result_file)["rows"]), 3)
