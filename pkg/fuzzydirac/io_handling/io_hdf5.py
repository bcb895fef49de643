# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import h5py
import numpy as np

from fuzzydirac.io_handling.serialization import SERIALIZATION_MAP
from fuzzydirac.log import Logger
from fuzzydirac.utils.serializer import SerializableFuzzyDiracClass

logger = Logger()


def save_hdf5(save_item, file_path: str, file_dictionary_path: str = "/", file_compression: str = None):
    """
    Saves a dictionary with arbitrary content or a serializable report to an hdf5-file with given filepath.

    :param save_item: Dictionary or SerializableFuzzyDiracClass to save.
    :param file_path: Path of the file to save the dictionary in.
    :param file_dictionary_path: Path in dictionary structure of existing hdf5 file to store the dictionary in.
    :param file_compression: possible file compression for the hdf5 output file. Values are: gzip, lzf and szip.
    """

    def data_grabber(h5file, path, data_dictionary, compression: str = None):
        for key, item in data_dictionary.items():
            key = str(key)
            if isinstance(item, SerializableFuzzyDiracClass):
                data_grabber(h5file, path + key + "/", item.serialize(), compression)
            elif item is None:
                _write(h5file, path + key, "None")
            elif isinstance(item, (list, tuple)):
                data_grabber(h5file, path + key + "/list/", {str(i): entry for i, entry in enumerate(item)},
                             compression)
            elif isinstance(item, dict):
                data_grabber(h5file, path + key + "/", item, compression)
            elif isinstance(item, np.ndarray):
                if path + key in h5file:
                    del h5file[path + key]
                try:
                    h5file.create_dataset(path + key, data=item, compression=compression)
                except (TypeError, ValueError) as e:
                    logger.critical(f"The array under '{path + key}' of dtype {item.dtype} was not serializable! "
                                    f"Full exception: {e}")
                    raise e
            elif isinstance(item, (bytes, str, bool, int, float, complex, np.generic)):
                _write(h5file, path + key, item)
            else:
                msg = f"The item under '{path + key}' of type {type(item)} cannot be written to HDF5"
                logger.critical(msg)
                raise TypeError(msg)

    writing_mode = "w" if file_dictionary_path == "/" else "a"
    if isinstance(save_item, SerializableFuzzyDiracClass):
        save_item = save_item.serialize()
    if not isinstance(save_item, dict):
        save_key = file_dictionary_path.split("/")[-2]
        save_item = {save_key: save_item}
        file_dictionary_path = "/".join(file_dictionary_path.split("/")[:-2]) + "/"
    logger.debug(f"Saving to {file_path} under {file_dictionary_path}...")
    with h5py.File(file_path, writing_mode) as h5file:
        data_grabber(h5file, file_dictionary_path, save_item, file_compression)
    logger.debug(f"Saving to {file_path} under {file_dictionary_path}...[Done]")


def _write(h5file, path, item):
    if path in h5file:
        del h5file[path]
    h5file[path] = item


def _plain(value):
    if isinstance(value, bytes):
        value = value.decode("utf-8")
    if isinstance(value, str):
        return None if value == "None" else value
    if isinstance(value, np.generic):
        return value.item()
    return value


def load_hdf5(file_path, file_dictionary_path="/"):
    """
    Loads a dictionary from an hdf5 file. Groups named after a serializable class are deserialized into
    instances of that class.

    :param file_path: Path of the file to load the dictionary from.
    :param file_dictionary_path: Path in dictionary structure of hdf5 file to load the dictionary from.
    :returns: Dictionary, list, array or deserialized instance
    """

    def data_grabber(h5file, path):
        node = h5file[path]
        if isinstance(node, h5py.Dataset):
            return _plain(node[()])

        dictionary = {}
        for key, item in node.items():
            if isinstance(item, h5py.Dataset):
                dictionary[key] = _plain(item[()])
            elif key in SERIALIZATION_MAP:
                return SERIALIZATION_MAP[key].deserialize(data_grabber(h5file, path + key + "/"))
            elif key == "list":
                entries = data_grabber(h5file, path + key + "/")
                return [entries[str(i)] for i in range(len(entries))]
            else:
                dictionary[key] = data_grabber(h5file, path + key + "/")
        return dictionary

    with h5py.File(file_path, "r") as h5file:
        return data_grabber(h5file, file_dictionary_path)
