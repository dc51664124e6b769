"""
Exhaustive scan for temporally periodic configurations.

The 2^n packed configurations of a ring are split into contiguous chunks;
every chunk is stepped twice at once with the numpy kernel and the words that
come back unchanged are kept. Chunks run on a process pool and are merged in
index order, so the result is sorted whatever the worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor, as_completed

import numpy as np
from loguru import logger

from majca.core.automaton import Configuration, Rule
from majca.core.kernel import MAX_PACKED_N, step_words
from majca.exceptions import BudgetExceeded
from majca.utils.config import settings


def scan_chunk(n: int, r: int, minority: bool, lo: int, hi: int) -> np.ndarray:
    """Words in [lo, hi) that return to themselves after two steps."""
    words = np.arange(lo, hi, dtype=np.uint64)
    twice = step_words(step_words(words, n, r, minority), n, r, minority)
    return words[twice == words]


def chunk_bounds(n: int, chunk_bits: int) -> list[tuple[int, int]]:
    size = 1 << min(chunk_bits, n)
    total = 1 << n
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def periodic_words(
    n: int,
    r: int,
    rule: Rule | None = None,
    workers: int | None = None,
    chunk_bits: int | None = None,
) -> np.ndarray:
    rule = rule or Rule.majority(r)
    if n > min(settings.bruteforce_max_n, MAX_PACKED_N):
        raise BudgetExceeded(
            f"Ring size {n} is beyond the brute-force budget",
            budget=settings.bruteforce_max_n,
            what="enumerate_bruteforce",
        )

    workers = workers if workers is not None else settings.workers
    workers = workers or os.cpu_count() or 1
    bounds = chunk_bounds(n, chunk_bits or settings.chunk_bits)
    minority = rule.is_minority
    logger.info(f"Scanning 2^{n} configurations in {len(bounds)} chunks ({rule})")

    if workers == 1 or len(bounds) == 1:
        found = [scan_chunk(n, r, minority, lo, hi) for lo, hi in bounds]
    else:
        results: dict[int, np.ndarray] = {}
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futs = {
                ex.submit(scan_chunk, n, r, minority, lo, hi): index
                for index, (lo, hi) in enumerate(bounds)
            }
            for fut in as_completed(futs):
                results[futs[fut]] = fut.result()
                logger.debug(f"Chunk {futs[fut]} done: {len(results[futs[fut]])} hits")
        found = [results[index] for index in range(len(bounds))]

    words = np.concatenate(found) if found else np.zeros(0, dtype=np.uint64)
    logger.info(f"Found {len(words)} temporally periodic configurations of size {n}")
    return words


def enumerate_bruteforce(
    n: int,
    r: int,
    rule: Rule | None = None,
    workers: int | None = None,
    chunk_bits: int | None = None,
) -> list[Configuration]:
    """Every configuration of size n with step^2 equal to itself, in text order."""
    words = periodic_words(n, r, rule, workers=workers, chunk_bits=chunk_bits)
    return [Configuration.packed(n, int(word)) for word in words]
