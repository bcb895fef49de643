# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from fuzzydirac.utils.tags import Tags
from fuzzydirac.utils.serializer import SerializableFuzzyDiracClass
from fuzzydirac.log import Logger


class Settings(dict, SerializableFuzzyDiracClass):
    """
    Dictionary of run settings with an automatic type check against the fuzzydirac.utils.Tags class. \n
    Usage: Settings({Tags.KEY1: value1, Tags.KEY2: value2, ...})
    """

    def __init__(self, dictionary: dict = None, verbose: bool = True):
        super(Settings, self).__init__()
        self.logger = Logger()
        self.verbose = verbose
        if dictionary is None:
            dictionary = {}
        for key, value in dictionary.items():
            self.__setitem__(key, value)

    def __setitem__(self, key, value):
        if isinstance(key, str):
            super().__setitem__(key, value)
            if self.verbose:
                self.logger.warning(f"The key '{key}' is not a Tag, its value {value} was stored without type check.")
            return
        elif not isinstance(key, tuple):
            raise TypeError(f"The key {key} of a Settings dictionary has to be a tuple ('name', types).")
        # integer tags reject bools
        if isinstance(value, key[1]) and not (isinstance(value, bool) and key[1] is int):
            super().__setitem__(key[0], value)
        else:
            raise ValueError(f"The value {value} ({type(value)}) for the key '{key[0]}' has to be an instance of: "
                             f"{key[1]}")

    def __contains__(self, item):
        if super().__contains__(item) is True:
            return True
        return isinstance(item, tuple) and super().__contains__(item[0])

    def __getitem__(self, item):
        if super().__contains__(item) is True:
            return super().__getitem__(item)
        try:
            return super().__getitem__(item[0])
        except KeyError:
            key = item[0] if isinstance(item, tuple) else item
            raise KeyError(f"The key '{key}' is not in the Settings dictionary") from None

    def __delitem__(self, key):
        if super().__contains__(key) is True:
            return super().__delitem__(key)
        try:
            return super().__delitem__(key[0])
        except KeyError:
            raise KeyError(f"The key '{key}' is not in the Settings dictionary") from None

    def get(self, key, default=None):
        return self[key] if key in self else default

    def serialize(self):
        return {"Settings": dict(self)}

    @staticmethod
    def deserialize(dictionary_to_deserialize: dict):
        return Settings(dictionary_to_deserialize, verbose=False)
