"""Prefix-partitioned fan-out with an order-independent merge."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence


def default_jobs() -> int:
    raw = os.environ.get("HRRUNS_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        return 1
    return max(1, jobs)


def map_partitions(fn: Callable, parts: Sequence, jobs: int | None = None) -> list:
    """``[fn(p) for p in parts]``, optionally across worker processes.

    Results come back in ``parts`` order whatever the completion order.
    ``fn`` must be a module-level function so it can be pickled.
    """
    jobs = default_jobs() if jobs is None else jobs
    if jobs <= 1 or len(parts) <= 1:
        return [fn(p) for p in parts]
    with ProcessPoolExecutor(max_workers=min(jobs, len(parts))) as pool:
        return list(pool.map(fn, parts))


def add_histograms(hists: Iterable[dict]) -> dict:
    """Coefficientwise sum; commutative, so partitioning does not matter."""
    total: dict[int, int] = {}
    for h in hists:
        for k, v in h.items():
            total[k] = total.get(k, 0) + v
    return total
