"""Exhaustive enumeration of connected labeled graphs by edge-subset bitmask.

Bit ``k`` of a mask selects the ``k``-th pair of
``itertools.combinations(range(n), 2)``; the mask doubles as ``graph_id``.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .. import _kernels
from ..errors import NTooLarge
from ..graph import WeightedGraph, graph_from_mask

MAX_N = 8
CHUNK = 1 << 18


def _filter_code(name: str) -> int:
    try:
        return _kernels.FILTERS[name]
    except KeyError:
        raise ValueError(f"unknown filter {name!r}; expected one of {sorted(_kernels.FILTERS)}") from None


def partition(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[lo, hi)`` into ``parts`` contiguous, nearly equal ranges."""
    cuts = np.linspace(lo, hi, max(parts, 1) + 1).astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(cuts[:-1], cuts[1:]) if b > a]


def _count_job(args):
    n, lo, hi, code = args
    return _kernels.count_connected(n, lo, hi, code)


def _scan_job(args):
    n, lo, hi, code = args
    return _kernels.scan(n, lo, hi, code)


@dataclass(frozen=True)
class EnumerationStream:
    """Connected graphs on ``n`` labeled nodes whose masks lie in ``[lo, hi)``."""

    n: int
    filter: str = "all-connected"
    lo: int = 0
    hi: int | None = None

    def __post_init__(self):
        if self.n > MAX_N:
            raise NTooLarge(f"enumeration supports n <= {MAX_N}, got {self.n}")
        if self.n < 2:
            raise NTooLarge(f"enumeration needs n >= 2, got {self.n}")
        _filter_code(self.filter)
        if self.hi is None:
            object.__setattr__(self, "hi", self.total_masks)
        if not 0 <= self.lo <= self.hi <= self.total_masks:
            raise ValueError("mask range out of bounds")

    @property
    def n_pairs(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def total_masks(self) -> int:
        return 1 << self.n_pairs

    def split(self, parts: int) -> list["EnumerationStream"]:
        return [EnumerationStream(self.n, self.filter, a, b)
                for a, b in partition(self.lo, self.hi, parts)]

    def _jobs(self, parts):
        code = _filter_code(self.filter)
        return [(self.n, a, b, code) for a, b in parts]

    def count(self, workers: int = 1) -> int:
        jobs = self._jobs(partition(self.lo, self.hi, max(workers, 1)))
        if workers <= 1:
            return sum(map(_count_job, jobs))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(_count_job, jobs))

    def chunks(self, chunk: int = CHUNK, workers: int = 1) -> Iterator[dict]:
        """Per-range scan results (see ``_kernels.scan``) in mask order."""
        jobs = self._jobs([(a, min(a + chunk, self.hi)) for a in range(self.lo, self.hi, chunk)])
        if workers <= 1:
            for job in jobs:
                yield _scan_job(job)
            return
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_scan_job, jobs)

    def masks(self, workers: int = 1) -> Iterator[int]:
        for part in self.chunks(workers=workers):
            yield from (int(m) for m in part["mask"])

    def __iter__(self) -> Iterator[WeightedGraph]:
        for m in self.masks():
            yield graph_from_mask(self.n, m)


def enumerate_connected(n: int, filter: str = "all-connected") -> EnumerationStream:
    return EnumerationStream(n, filter)


def masks_to_laplacians(n: int, masks: np.ndarray) -> np.ndarray:
    """Stack of unweighted Laplacians, shape ``(len(masks), n, n)``."""
    iu, ju = np.triu_indices(n, 1)
    masks = np.asarray(masks, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(len(iu))) & 1).astype(float)
    L = np.zeros((len(masks), n, n))
    L[:, iu, ju] = -bits
    L[:, ju, iu] = -bits
    idx = np.arange(n)
    L[:, idx, idx] = -L.sum(axis=2)
    return L
