"""
Output-sensitive construction of the temporally periodic configurations.

Periodic configurations come in two families. The strongly stable family has
every run of length at least r+1 and is listed directly from compositions of n.
The weakly stable family is built from a finite set of generator patterns s:
all runs are at most r and |s| is at most 2r(r+1). Generators are found once
per radius by searching run-length compositions and testing each candidate as
a ring of size |s|, which decides every repetition s^k at the same time.
"""

from collections import defaultdict

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from majca.core.automaton import Configuration, parse_configuration
from majca.core.kernel import MAX_PACKED_N, primitive_words, step_words
from majca.enumeration.canonical import canonicalize, symmetry_orbit
from majca.exceptions import BudgetExceeded
from majca.utils.config import settings


class GeneratorSet(BaseModel):
    """Canonical generators of the weakly stable family for one radius.

    The strongly stable family is not listed here; it is every configuration
    whose runs all have length at least r+1.
    """

    model_config = ConfigDict(frozen=True)

    radius: int = Field(ge=1)
    generators: tuple[str, ...]

    @property
    def max_length(self) -> int:
        return 2 * self.radius * (self.radius + 1)

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, pattern: str) -> bool:
        return pattern in self.generators


def _compositions(r: int, limit: int) -> dict[int, np.ndarray]:
    """Packed strings of every run composition with parts in [1, r].

    Runs alternate starting with 0 and only an even number of runs is kept,
    so the first and last runs differ across the ring seam.
    """
    words = np.zeros(1, dtype=np.uint64)
    lengths = np.zeros(1, dtype=np.int64)
    found: dict[int, list[np.ndarray]] = defaultdict(list)
    value, runs = 0, 0
    while words.size:
        grown_words, grown_lengths = [], []
        for part in range(1, r + 1):
            fits = lengths + part <= limit
            grown = words[fits] << np.uint64(part)
            if value:
                grown |= np.uint64((1 << part) - 1)
            grown_words.append(grown)
            grown_lengths.append(lengths[fits] + part)
        words = np.concatenate(grown_words)
        lengths = np.concatenate(grown_lengths)
        value, runs = value ^ 1, runs + 1
        if runs % 2 == 0:
            for length in np.unique(lengths):
                found[int(length)].append(words[lengths == length])
    return {length: np.unique(np.concatenate(parts)) for length, parts in found.items()}


def generate_patterns(r: int) -> GeneratorSet:
    if r < 1:
        raise ValueError(f"radius must be positive, got {r}")
    limit = 2 * r * (r + 1)
    if r > settings.pattern_max_radius or limit > MAX_PACKED_N:
        raise BudgetExceeded(
            f"Pattern search for r={r} is beyond the configured radius budget",
            budget=settings.pattern_max_radius,
            what="generate_patterns",
        )

    canonical: set[str] = set()
    for length, words in sorted(_compositions(r, limit).items()):
        twice = step_words(step_words(words, length, r), length, r)
        keep = (twice == words) & primitive_words(words, length)
        for word in words[keep]:
            form = canonicalize(Configuration.packed(length, int(word)))
            canonical.add(form.representative.to_text())
        logger.debug(f"r={r} length {length}: {len(words)} candidates, {int(keep.sum())} kept")

    generators = tuple(sorted(canonical, key=lambda s: (len(s), s)))
    logger.info(f"r={r}: {len(generators)} weakly stable generators")
    return GeneratorSet(radius=r, generators=generators)


def _long_run_compositions(n: int, minimum: int):
    """Compositions of n into an even number of parts, each at least `minimum`."""
    stack = [(0, [])]
    while stack:
        total, parts = stack.pop()
        if total == n:
            if len(parts) % 2 == 0:
                yield parts
            continue
        for part in range(minimum, n - total + 1):
            stack.append((total + part, parts + [part]))


def strongly_stable_family(n: int, r: int) -> set[Configuration]:
    """Every ring of size n whose runs all have length at least r+1, homogeneous included."""
    family = {Configuration.homogeneous(n, 0), Configuration.homogeneous(n, 1)}
    for parts in _long_run_compositions(n, r + 1):
        cells: list[int] = []
        for k, part in enumerate(parts):
            cells.extend([k % 2] * part)
        base = Configuration.from_cells(cells)
        family.update(base.rotate(k) for k in range(n))
    return family


def weakly_stable_family(n: int, generators: GeneratorSet) -> set[Configuration]:
    family: set[Configuration] = set()
    for pattern in generators.generators:
        if n % len(pattern) == 0:
            family |= symmetry_orbit(parse_configuration(pattern, n // len(pattern)))
    return family


def enumerate_from_patterns(
    n: int, r: int, generators: GeneratorSet | None = None
) -> list[Configuration]:
    generators = generators or generate_patterns(r)
    found = strongly_stable_family(n, r) | weakly_stable_family(n, generators)
    return sorted(found, key=lambda cfg: cfg.bits)
