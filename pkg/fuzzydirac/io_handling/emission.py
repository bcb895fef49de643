# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Writes the result table of a suite as CSV, JSON or HDF5. Every artifact starts with the run header
(program, version, subcommand, seed, tolerances).
"""

import io
import json
import sys
from typing import TextIO

import numpy as np
import pandas as pd

from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.io_handling.io_hdf5 import save_hdf5
from fuzzydirac.log import Logger
from fuzzydirac.utils.exceptions import ConfigError

FLOAT_FORMAT = "%.12g"


def _csv_text(header: dict, table: pd.DataFrame) -> str:
    buffer = io.StringIO()
    for key, value in header.items():
        buffer.write(f"# {key}: {value}\n")
    table.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def _json_value(value):
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not np.isfinite(value):
        return None
    return value


def _json_text(header: dict, result: SuiteResult) -> str:
    rows = [{column: _json_value(value) for column, value in row.items()}
            for row in result.table.astype(object).to_dict(orient="records")]
    document = {
        "meta": header,
        "rows": rows,
        "checks": [{"name": name, "value": _json_value(value), "tolerance": _json_value(tolerance)}
                   for name, value, tolerance in result.checks],
    }
    document.update(result.extras)
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def emit_result(result: SuiteResult, header: dict, emit: str = "csv", out: str = None, stream: TextIO = None):
    """
    :param result: the suite result to write
    :param header: the run header
    :param emit: csv, json or hdf5
    :param out: output file; csv and json go to the stream (stdout by default) without it
    :raises ConfigError: for unknown formats or hdf5 without an output file
    """
    logger = Logger()
    if emit == "hdf5":
        if out is None:
            msg = "hdf5 output needs an output file"
            logger.critical(msg)
            raise ConfigError(msg)
        save_hdf5({"meta": header, "result": result}, out)
        logger.info(f"Wrote {result.name} results to {out}")
        return
    if emit == "csv":
        text = _csv_text(header, result.table)
    elif emit == "json":
        text = _json_text(header, result)
    else:
        msg = f"Unknown output format '{emit}'"
        logger.critical(msg)
        raise ConfigError(msg)
    if out is None:
        stream = sys.stdout if stream is None else stream
        stream.write(text)
        stream.flush()
    else:
        with open(out, "w", newline="\n") as output_file:
            output_file.write(text)
        logger.info(f"Wrote {result.name} results to {out}")
