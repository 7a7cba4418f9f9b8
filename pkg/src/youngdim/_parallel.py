"""Deterministic work sharding.

Worker counts shard independent subcomputations across a thread pool.
Results are always merged back in input order, so output bytes never
depend on the worker count, only wall time does.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def sharded_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1) -> list[R]:
    data = list(items)
    if workers <= 1 or len(data) <= 1:
        return [fn(x) for x in data]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, data))


def chunked(seq: Sequence[T], parts: int) -> list[Sequence[T]]:
    """Split a sequence into at most `parts` contiguous, order-preserving runs."""
    parts = max(1, min(parts, len(seq)))
    if parts == 1:
        return [seq]
    step, extra = divmod(len(seq), parts)
    out = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append(seq[start:stop])
        start = stop
    return out
