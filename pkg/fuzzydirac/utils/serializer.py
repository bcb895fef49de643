# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from abc import ABC, abstractmethod


class SerializableFuzzyDiracClass(ABC):
    """
    Base class of every report and value type that can be written into an HDF5 result file.
    serialize returns a dictionary of plain python / numpy values keyed by the class name,
    deserialize rebuilds the instance from the inner dictionary.
    """

    @abstractmethod
    def serialize(self) -> dict:
        pass

    @staticmethod
    @abstractmethod
    def deserialize(dictionary_to_deserialize: dict):
        pass
