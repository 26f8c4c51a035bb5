"""Conversions between python-int bitsets and numpy index/boolean arrays.

Element sets of finite rings and modules are stored as python ints whose bit i
marks element index i. Subset tests and intersections are then single integer
operations.
"""

import numpy as np


def from_bool(flags: np.ndarray) -> int:
    packed = np.packbits(np.asarray(flags, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def from_indices(indices, size: int) -> int:
    flags = np.zeros(size, dtype=bool)
    flags[np.asarray(indices, dtype=np.int64)] = True
    return from_bool(flags)


def to_bool(mask: int, size: int) -> np.ndarray:
    nbytes = (size + 7) // 8
    raw = np.frombuffer(mask.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:size].astype(bool)


def to_indices(mask: int, size: int) -> np.ndarray:
    return np.flatnonzero(to_bool(mask, size))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
