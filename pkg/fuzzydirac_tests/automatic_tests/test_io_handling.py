# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import io
import json
import os
import unittest

import numpy as np
import pandas as pd

from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.io_handling import load_hdf5, save_hdf5, emit_result
from fuzzydirac.utils import Tags, Settings, RunConfig
from fuzzydirac.utils.exceptions import ConfigError
from fuzzydirac_tests.test_utils.tests_utils import assert_equals_recursive, assert_results_equal


class TestIOHandling(unittest.TestCase):

    def setUp(self):
        self.path = "test.hdf5"
        self.header = {"program": "fuzzy-dirac", "version": "test", "subcommand": "verify", "seed": 0,
                       "tol_eig": 1e-9, "tol_id": 1e-10}
        table = pd.DataFrame({"check": ["square", "leibniz"], "residual": [1e-12, np.nan],
                              "tolerance": [1e-10, 1e-10], "passed": [True, False]})
        self.result = SuiteResult("verify", table, [("square", 1e-12, 1e-10), ("dimension", True, None)],
                                  {"trends": {"gap_strictly_decreasing": True}})

    def tearDown(self):
        if os.path.exists(self.path):
            os.remove(self.path)

    def assert_save_and_read_dictionaries_equal(self, save_dict):
        try:
            save_hdf5(save_dict, self.path)
            read_dictionary = load_hdf5(self.path)
        finally:
            if os.path.exists(self.path):
                os.remove(self.path)
        assert_equals_recursive(save_dict, read_dictionary)

    def test_write_and_read_plain_dictionary(self):
        self.assert_save_and_read_dictionaries_equal({"meta": dict(self.header),
                                                      "values": np.arange(5.0),
                                                      "levels": [1, 2, 3],
                                                      "missing": None})

    def test_write_and_read_settings(self):
        settings = Settings({Tags.LEVEL: 3, Tags.EMIT: "json"}, verbose=False)
        save_hdf5({"settings": settings}, self.path)
        read = load_hdf5(self.path)["settings"]
        self.assertIsInstance(read, Settings)
        self.assertEqual(read[Tags.LEVEL], 3)
        self.assertEqual(read[Tags.EMIT], "json")

    def test_write_and_read_run_config(self):
        config = RunConfig({Tags.SUBCOMMAND: "bridge", Tags.BRIDGE_LEVEL: 3})
        save_hdf5({"config": config}, self.path)
        read = load_hdf5(self.path)["config"]
        self.assertIsInstance(read, RunConfig)
        self.assertEqual(read[Tags.BRIDGE_LEVEL], 3)
        self.assertEqual(read[Tags.SUBCOMMAND], "bridge")

    def test_write_and_read_suite_result(self):
        save_hdf5({"meta": self.header, "result": self.result}, self.path)
        read = load_hdf5(self.path)
        assert_equals_recursive(self.header, read["meta"])
        self.assertIsInstance(read["result"], SuiteResult)
        assert_results_equal(self.result, read["result"])

    def test_emit_hdf5(self):
        emit_result(self.result, self.header, "hdf5", self.path)
        read = load_hdf5(self.path)
        assert_results_equal(self.result, read["result"])
        with self.assertRaises(ConfigError):
            emit_result(self.result, self.header, "hdf5")

    def test_emit_csv(self):
        stream = io.StringIO()
        emit_result(self.result, self.header, "csv", stream=stream)
        lines = stream.getvalue().split("\n")
        self.assertEqual(lines[0], "# program: fuzzy-dirac")
        self.assertEqual(lines[5], "# tol_id: 1e-10")
        self.assertEqual(lines[6], "check,residual,tolerance,passed")
        self.assertEqual(lines[7], "square,1e-12,1e-10,True")
        self.assertEqual(lines[8], "leibniz,,1e-10,False")

    def test_emit_json(self):
        stream = io.StringIO()
        emit_result(self.result, self.header, "json", stream=stream)
        document = json.loads(stream.getvalue())
        self.assertEqual(document["meta"], self.header)
        self.assertEqual(len(document["rows"]), 2)
        self.assertIsNone(document["rows"][1]["residual"])
        self.assertEqual(document["checks"][1], {"name": "dimension", "value": True, "tolerance": None})
        self.assertTrue(document["trends"]["gap_strictly_decreasing"])

    def test_emit_to_file(self):
        path = "test.csv"
        try:
            emit_result(self.result, self.header, "csv", path)
            with open(path) as csv_file:
                self.assertTrue(csv_file.read().startswith("# program: fuzzy-dirac\n"))
        finally:
            if os.path.exists(path):
                os.remove(path)

    def test_unknown_format(self):
        with self.assertRaises(ConfigError):
            emit_result(self.result, self.header, "xml", stream=io.StringIO())

    def test_failures(self):
        self.assertEqual(self.result.failures, [])
        self.assertTrue(self.result.passed)
        failing = SuiteResult("x", pd.DataFrame(), [("numeric", 2.0, 1.0), ("flag", False, None),
                                                     ("reported", 5.0, None), ("nan", np.nan, 1.0)])
        self.assertEqual([name for name, _, _ in failing.failures], ["numeric", "flag", "nan"])
        self.assertFalse(failing.passed)
