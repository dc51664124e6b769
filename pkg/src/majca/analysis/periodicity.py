"""
Temporal classification, spatial period and the three-way structure theorem
for configurations under the radius-r majority rule, plus the doubled
potential that grows along every trajectory.
"""

from enum import Enum

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from majca.analysis.stability import classify_stability, unstable_runs
from majca.analysis.structure import bias, blocks, whole_ring
from majca.core.automaton import Configuration, Rule, Trajectory, step
from majca.core.kernel import divisors
from majca.exceptions import LengthMismatch, PreconditionViolated


class TemporalTag(str, Enum):
    FIXED_POINT = "FixedPoint"
    TWO_CYCLE = "TwoCycle"
    TRANSIENT = "Transient"


class TemporalClass(BaseModel):
    model_config = ConfigDict(frozen=True)

    tag: TemporalTag
    partner: Configuration | None = None

    @model_validator(mode="after")
    def _partner_only_for_cycles(self):
        if (self.tag == TemporalTag.TWO_CYCLE) != (self.partner is not None):
            raise ValueError("a partner is present exactly for 2-cycles")
        return self


class ClassificationCase(str, Enum):
    STRONGLY_STABLE_FIXED_FORM = "StronglyStableFixedForm"
    WEAKLY_STABLE_PERIODIC = "WeaklyStablePeriodic"
    TRANSIENT = "Transient"


class ClassificationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: ClassificationCase
    spatial_period: int | None = Field(default=None, ge=1)
    max_unstable_run: int | None = Field(default=None, ge=0)


class PotentialValue(BaseModel):
    """Twice the potential of a pair of consecutive states, kept integral."""

    model_config = ConfigDict(frozen=True)

    doubled: int

    def __sub__(self, other: "PotentialValue") -> int:
        return self.doubled - other.doubled


def temporal_class(cfg: Configuration, rule: Rule) -> TemporalClass:
    successor = step(cfg, rule)
    if successor == cfg:
        return TemporalClass(tag=TemporalTag.FIXED_POINT)
    if step(successor, rule) == cfg:
        return TemporalClass(tag=TemporalTag.TWO_CYCLE, partner=successor)
    return TemporalClass(tag=TemporalTag.TRANSIENT)


def is_temporally_periodic(cfg: Configuration, r: int) -> bool:
    return temporal_class(cfg, Rule.majority(r)).tag != TemporalTag.TRANSIENT


def spatial_period(cfg: Configuration) -> int:
    for p in divisors(cfg.n):
        if cfg.rotate(p) == cfg:
            return p
    return cfg.n


def classify_theorem(cfg: Configuration, r: int) -> ClassificationResult:
    """Place cfg in exactly one case of the structure theorem.

    Periodic configurations have either only runs of length >= r+1 (or are
    homogeneous) or only runs of length <= r; everything else is transient and
    reports its longest unstable run.
    """
    rule = Rule.majority(r)
    if not is_temporally_periodic(cfg, r):
        runs = unstable_runs(classify_stability(cfg, rule))
        return ClassificationResult(
            case=ClassificationCase.TRANSIENT,
            max_unstable_run=max(run.length for run in runs),
        )

    lengths = [block.length for block in blocks(cfg)]
    if cfg.is_homogeneous() or min(lengths) >= r + 1:
        return ClassificationResult(case=ClassificationCase.STRONGLY_STABLE_FIXED_FORM)
    if max(lengths) <= r:
        return ClassificationResult(
            case=ClassificationCase.WEAKLY_STABLE_PERIODIC,
            spatial_period=spatial_period(cfg),
        )

    logger.error(f"Periodic configuration {cfg} mixes short and long blocks at r={r}")
    raise PreconditionViolated(
        "Temporally periodic configuration has blocks on both sides of r",
        operation="classify_theorem",
    )


def _neighborhood_sums(states: np.ndarray, r: int) -> np.ndarray:
    total = np.zeros_like(states)
    for offset in range(-r, r + 1):
        total += np.roll(states, -offset)
    return total


def potential2(previous: Configuration, current: Configuration, r: int) -> PotentialValue:
    """Doubled potential of (E_{t-1}, E_t).

    2 * sum E_t(i) g_{t-1}(i) - (2r+1) * sum (E_t(i) + E_{t-1}(i)), where
    g_{t-1}(i) counts the ones of E_{t-1} in the neighborhood of i.
    """
    if previous.n != current.n:
        raise LengthMismatch(
            "Potential needs two states of one ring", left=previous.n, right=current.n
        )
    before = np.array(previous.cells(), dtype=np.int64)
    after = np.array(current.cells(), dtype=np.int64)
    g = _neighborhood_sums(before, r)
    doubled = 2 * int(after @ g) - (2 * r + 1) * int(after.sum() + before.sum())
    return PotentialValue(doubled=doubled)


def potential_trajectory(trajectory: Trajectory, r: int | None = None) -> list[PotentialValue]:
    """Doubled potential at every step t >= 1 of a recorded trajectory."""
    r = r or trajectory.rule.radius
    states = trajectory.states
    return [potential2(states[t - 1], states[t], r) for t in range(1, len(states))]


def flip_count(before: Configuration, after: Configuration) -> int:
    return (before.bits ^ after.bits).bit_count()


def is_balanced_weakly_stable(cfg: Configuration, r: int) -> bool:
    if cfg.is_homogeneous() or not is_temporally_periodic(cfg, r):
        raise PreconditionViolated(
            f"{cfg} is not a weakly stable periodic configuration",
            operation="is_balanced_weakly_stable",
        )
    if max(block.length for block in blocks(cfg)) > r:
        raise PreconditionViolated(
            f"{cfg} has a block longer than r={r}",
            operation="is_balanced_weakly_stable",
        )
    return bias(cfg, whole_ring(cfg)) == 0
