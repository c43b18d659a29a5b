"""Immutable sorted integer datasets: loading, validation, fingerprinting."""

from __future__ import annotations

import hashlib
import struct
from typing import IO, Iterable, NamedTuple

import numpy as np

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class DatasetError(Exception):
    """Base class for dataset loading failures."""


class ParseError(DatasetError):
    def __init__(self, line_no: int, text: str):
        super().__init__(f"line {line_no}: not a base-10 integer: {text!r}")
        self.line_no = line_no
        self.text = text


class NotSortedError(DatasetError):
    def __init__(self, index: int):
        super().__init__(f"values decrease at index {index}")
        self.index = index


class DatasetId(NamedTuple):
    """Content fingerprint of a dataset; equal iff the value sequences are equal
    (up to negligible digest collisions)."""

    digest: bytes

    def hex(self) -> str:
        return self.digest.hex()


def fingerprint(values: Iterable[int]) -> DatasetId:
    """128-bit blake2b digest over the little-endian int64 encoding of values."""
    if isinstance(values, np.ndarray):
        encoded = values.astype("<i8").tobytes()
    else:
        vs = values if isinstance(values, (list, tuple)) else list(values)
        if len(vs) <= 64:
            encoded = struct.pack(f"<{len(vs)}q", *vs)
        else:
            encoded = np.asarray(vs, dtype=np.int64).astype("<i8").tobytes()
    h = hashlib.blake2b(encoded, digest_size=16)
    return DatasetId(h.digest())


class SortedDataset:
    """A nondecreasing sequence of 64-bit signed integers with a stable
    content fingerprint. Immutable after construction."""

    __slots__ = ("values", "id")

    values: tuple[int, ...]
    id: DatasetId

    def __init__(self, values: tuple[int, ...], dataset_id: DatasetId):
        # internal: use from_values() / load_dataset(), which validate
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "id", dataset_id)

    def __setattr__(self, name, value):
        raise AttributeError("SortedDataset is immutable")

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, SortedDataset) and self.id == other.id

    def __hash__(self) -> int:
        return hash(self.id)

    def __repr__(self) -> str:
        return f"SortedDataset(len={len(self.values)}, id={self.id.hex()[:12]})"

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "SortedDataset":
        """Build a dataset, verifying (not assuming) nondecreasing order and
        64-bit range."""
        if isinstance(values, np.ndarray):
            vt = tuple(int(v) for v in values.tolist())
        else:
            vt = tuple(int(v) for v in values)
        prev = None
        for i, v in enumerate(vt):
            if v < INT64_MIN or v > INT64_MAX:
                raise OverflowError(f"value at index {i} exceeds 64-bit range: {v}")
            if prev is not None and v < prev:
                raise NotSortedError(i)
            prev = v
        return cls(vt, fingerprint(vt))

    @classmethod
    def from_sorted_array(cls, arr: np.ndarray) -> "SortedDataset":
        """Fast path for an int64 array already known to need only the order check."""
        if arr.dtype != np.int64:
            arr = arr.astype(np.int64)
        if len(arr) > 1:
            diffs = np.diff(arr)
            if np.any(diffs < 0):
                raise NotSortedError(int(np.argmax(diffs < 0)) + 1)
        return cls(tuple(arr.tolist()), fingerprint(arr))

    def dump(self, stream: IO[str]) -> None:
        """Serialize back to the line-delimited text format."""
        for v in self.values:
            stream.write(f"{v}\n")


def load_dataset(stream: IO[str]) -> SortedDataset:
    """Parse the line-delimited integer format: one base-10 signed 64-bit
    integer per line, LF separated (CR stripped), whitespace-only lines
    ignored. Order is verified, never trusted."""
    values: list[int] = []
    prev: int | None = None
    for line_no, raw in enumerate(stream, start=1):
        text = raw.rstrip("\r\n")
        if not text.strip():
            continue
        try:
            v = int(text.strip(), 10)
        except ValueError:
            raise ParseError(line_no, text) from None
        if v < INT64_MIN or v > INT64_MAX:
            raise OverflowError(f"line {line_no}: value exceeds 64-bit range: {text.strip()}")
        if prev is not None and v < prev:
            raise NotSortedError(len(values))
        values.append(v)
        prev = v
    vt = tuple(values)
    return SortedDataset(vt, fingerprint(vt))
