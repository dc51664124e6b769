"""
Per-cell stability labels.

A cell is strongly stable when it sits in a homogeneous run of at least r+1
cells, unstable when its state differs two steps later, and weakly stable
otherwise.
"""

from collections import Counter
from enum import Enum

from pydantic import BaseModel, ConfigDict

from majca.analysis.structure import blocks
from majca.core.automaton import CellInterval, Configuration, Rule, Trajectory, step_twice


class StabilityLabel(str, Enum):
    STRONGLY_STABLE = "S"
    WEAKLY_STABLE = "W"
    UNSTABLE = "U"


class StabilityMap(BaseModel):
    model_config = ConfigDict(frozen=True)

    labels: tuple[StabilityLabel, ...]
    rule: Rule

    @property
    def n(self) -> int:
        return len(self.labels)

    def letters(self) -> str:
        return "".join(label.value for label in self.labels)

    def __getitem__(self, i: int) -> StabilityLabel:
        return self.labels[i % len(self.labels)]


def strongly_stable_cells(cfg: Configuration, r: int) -> set[int]:
    """Cells of runs of length >= r+1; a homogeneous ring counts whole."""
    if cfg.is_homogeneous():
        return set(range(cfg.n))
    stable: set[int] = set()
    for block in blocks(cfg):
        if block.length >= r + 1:
            stable.update(block.interval.cells())
    return stable


def classify_stability(cfg: Configuration, rule: Rule) -> StabilityMap:
    n = cfg.n
    strong = strongly_stable_cells(cfg, rule.radius)
    moved = cfg.bits ^ step_twice(cfg, rule).bits
    labels = []
    for i in range(n):
        if i in strong:
            labels.append(StabilityLabel.STRONGLY_STABLE)
        elif (moved >> (n - 1 - i)) & 1:
            labels.append(StabilityLabel.UNSTABLE)
        else:
            labels.append(StabilityLabel.WEAKLY_STABLE)
    return StabilityMap(labels=tuple(labels), rule=rule)


def unstable_runs(stability: StabilityMap) -> list[CellInterval]:
    """Maximal cyclic runs of unstable cells, in ring order."""
    n = stability.n
    unstable = [label == StabilityLabel.UNSTABLE for label in stability.labels]
    if all(unstable):
        return [CellInterval.between(0, n - 1, n)]
    if not any(unstable):
        return []

    # start scanning just after a settled cell so no run is split
    origin = unstable.index(False) + 1
    runs: list[CellInterval] = []
    start = None
    for offset in range(n + 1):
        i = (origin + offset) % n
        if offset < n and unstable[i]:
            if start is None:
                start = origin + offset
        elif start is not None:
            runs.append(CellInterval.span(start, origin + offset - 1, n))
            start = None
    return sorted(runs, key=lambda run: run.start)


def stability_grid(trajectory: Trajectory, rule: Rule | None = None) -> list[StabilityMap]:
    """Labels of every recorded state, one map per time step."""
    rule = rule or trajectory.rule
    return [classify_stability(state, rule) for state in trajectory.states]


def count_labels(stability: StabilityMap) -> dict[StabilityLabel, int]:
    counts = Counter(stability.labels)
    return {label: counts.get(label, 0) for label in StabilityLabel}
