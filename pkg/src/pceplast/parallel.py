"""Fixed-topology chunked evaluation.

Work over ``n`` items is cut into chunks of a fixed size that does not depend
on the number of workers; chunks are evaluated by a thread pool (numpy
releases the GIL) and concatenated in index order, so results are identical
for any ``threads``.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

DEFAULT_CHUNK = 16384


def default_threads() -> int:
    return os.cpu_count() or 1


def chunk_ranges(n: int, chunk: int = DEFAULT_CHUNK) -> list[tuple[int, int]]:
    return [(a, min(a + chunk, n)) for a in range(0, n, chunk)]


def map_chunks(func, n: int, threads: int = 1, chunk: int = DEFAULT_CHUNK) -> list:
    """``[func(a, b) for (a, b) in chunk_ranges(n, chunk)]``, possibly threaded."""
    ranges = chunk_ranges(n, chunk)
    if threads <= 1 or len(ranges) <= 1:
        return [func(a, b) for a, b in ranges]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(func, a, b) for a, b in ranges]
        return [f.result() for f in futures]
