# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import json
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from fuzzydirac.utils.serializer import SerializableFuzzyDiracClass


@dataclass
class SuiteResult(SerializableFuzzyDiracClass):
    """
    The outcome of a suite: the emitted table, the checks it asserts and extra JSON content.

    A check is a tuple (name, value, tolerance). A numeric check passes if value <= tolerance, a boolean check if
    value is True; a tolerance of None marks a numeric value that is only reported.
    """
    name: str
    table: pd.DataFrame
    checks: list = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    @property
    def failures(self) -> list:
        failed = []
        for name, value, tolerance in self.checks:
            if isinstance(value, (bool, np.bool_)):
                if not value:
                    failed.append((name, value, tolerance))
            elif tolerance is not None and not value <= tolerance:
                failed.append((name, value, tolerance))
        return failed

    @property
    def passed(self) -> bool:
        return not self.failures

    def serialize(self) -> dict:
        columns = {}
        for column in self.table.columns:
            values = self.table[column]
            if pd.api.types.is_numeric_dtype(values) and not pd.api.types.is_bool_dtype(values):
                columns[str(column)] = values.to_numpy()
            else:
                columns[str(column)] = [None if value is None or (isinstance(value, float) and np.isnan(value))
                                        else value for value in values.tolist()]
        return {"SuiteResult": {
            "name": self.name,
            "column_order": [str(column) for column in self.table.columns],
            "columns": columns,
            "checks": [{"name": name, "value": value, "tolerance": tolerance}
                       for name, value, tolerance in self.checks],
            "extras": json.dumps(self.extras),
        }}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        columns = dictionary_to_deserialize["columns"]
        order = dictionary_to_deserialize["column_order"]
        table = pd.DataFrame({column: columns[column] for column in order}, columns=order)
        checks = [(check["name"], check["value"], check["tolerance"])
                  for check in dictionary_to_deserialize.get("checks", [])]
        return SuiteResult(name=dictionary_to_deserialize["name"], table=table, checks=checks,
                           extras=json.loads(dictionary_to_deserialize.get("extras", "{}")))
