"""
Cyclic binary configurations and the majority/minority rule engine.
"""

from enum import Enum

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from majca.core.kernel import (
    complement_words,
    full_mask,
    rotate_left,
    step_words,
)
from majca.exceptions import BudgetExceeded, EmptyText, InvalidCharacter


class Configuration(BaseModel):
    """A ring of n binary cells packed into one integer, cell 0 most significant."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Ring size")
    bits: int = Field(ge=0, description="Packed states, cell i is bit n-1-i")

    @model_validator(mode="after")
    def _bits_fit_ring(self):
        if self.bits >> self.n:
            raise ValueError(f"bits do not fit in a ring of size {self.n}")
        return self

    @classmethod
    def packed(cls, n: int, bits: int) -> "Configuration":
        # Kernel output is already in range; skip validation on the hot path.
        return cls.model_construct(n=n, bits=bits)

    @classmethod
    def from_cells(cls, cells) -> "Configuration":
        cells = list(cells)
        bits = 0
        for cell in cells:
            bits = (bits << 1) | (1 if cell else 0)
        return cls(n=len(cells), bits=bits)

    @classmethod
    def homogeneous(cls, n: int, state: int) -> "Configuration":
        return cls(n=n, bits=full_mask(n) if state else 0)

    def __getitem__(self, i: int) -> int:
        return (self.bits >> (self.n - 1 - i % self.n)) & 1

    def __str__(self) -> str:
        return self.to_text()

    def __len__(self) -> int:
        return self.n

    def to_text(self) -> str:
        return format(self.bits, f"0{self.n}b")

    def cells(self) -> list[int]:
        return [int(c) for c in self.to_text()]

    def ones(self) -> int:
        return self.bits.bit_count()

    def is_homogeneous(self) -> bool:
        return self.bits == 0 or self.bits == full_mask(self.n)

    def complement(self) -> "Configuration":
        return Configuration.packed(self.n, complement_words(self.bits, self.n))

    def rotate(self, k: int) -> "Configuration":
        """Cell i of the result holds cell i+k of this configuration."""
        return Configuration.packed(self.n, rotate_left(self.bits, self.n, k))

    def mirror(self) -> "Configuration":
        return Configuration.packed(self.n, int(self.to_text()[::-1], 2))


class CellInterval(BaseModel):
    """The cell sequence start, start+1, ... of the given length, read mod n.

    Lengths above n revisit cells; counts over such an interval are taken with
    multiplicity.
    """

    model_config = ConfigDict(frozen=True)

    start: int = Field(ge=0)
    end: int = Field(ge=0)
    length: int = Field(ge=1)
    n: int = Field(ge=1)

    @model_validator(mode="after")
    def _consistent(self):
        if self.start >= self.n or self.end >= self.n:
            raise ValueError("interval endpoints must be cells of the ring")
        if (self.start + self.length - 1) % self.n != self.end:
            raise ValueError("interval length does not reach its end cell")
        return self

    @classmethod
    def between(cls, i: int, j: int, n: int) -> "CellInterval":
        """The wrap-around interval [i, j] of length ((j - i) mod n) + 1."""
        i, j = i % n, j % n
        return cls(start=i, end=j, length=(j - i) % n + 1, n=n)

    @classmethod
    def span(cls, a: int, b: int, n: int) -> "CellInterval":
        """The sequence a..b of unreduced offsets, b - a + 1 cells long."""
        if b < a:
            raise ValueError(f"span end {b} precedes start {a}")
        return cls(start=a % n, end=b % n, length=b - a + 1, n=n)

    @classmethod
    def neighborhood(cls, i: int, r: int, n: int) -> "CellInterval":
        return cls.span(i - r, i + r, n)

    def cells(self) -> list[int]:
        return [(self.start + k) % self.n for k in range(self.length)]

    def __contains__(self, cell: int) -> bool:
        return (cell - self.start) % self.n < self.length

    def __str__(self) -> str:
        return f"[{self.start},{self.end}]"


class RuleKind(str, Enum):
    MAJORITY = "maj"
    MINORITY = "min"


class Rule(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: RuleKind = RuleKind.MAJORITY
    radius: int = Field(ge=1)

    @classmethod
    def majority(cls, radius: int) -> "Rule":
        return cls(kind=RuleKind.MAJORITY, radius=radius)

    @classmethod
    def minority(cls, radius: int) -> "Rule":
        return cls(kind=RuleKind.MINORITY, radius=radius)

    @property
    def is_minority(self) -> bool:
        return self.kind == RuleKind.MINORITY

    def __str__(self) -> str:
        return f"{self.kind.value} r={self.radius}"


class Trajectory(BaseModel):
    """Recorded states sigma_0 .. sigma_T with the detected cycle, if any."""

    model_config = ConfigDict(frozen=True)

    states: tuple[Configuration, ...]
    rule: Rule
    preperiod: int | None = Field(default=None, ge=0)
    period: int | None = Field(default=None, ge=1, le=2)

    @property
    def final(self) -> Configuration:
        return self.states[-1]

    @property
    def steps(self) -> int:
        return len(self.states) - 1


def parse_configuration(text: str, copies: int = 1) -> Configuration:
    if copies < 1:
        raise ValueError(f"copies must be positive, got {copies}")
    if not text:
        raise EmptyText()
    for position, char in enumerate(text):
        if char not in "01":
            raise InvalidCharacter(
                "Configuration text may only contain '0' and '1'",
                text=text,
                position=position,
            )
    return Configuration(n=len(text) * copies, bits=int(text * copies, 2))


def count_states(cfg: Configuration, interval: CellInterval, state: int) -> int:
    """Number of positions of `interval` holding `state`, with multiplicity."""
    n = cfg.n
    laps, rest = divmod(interval.length, n)
    ones = laps * cfg.ones()
    if rest:
        window = rotate_left(cfg.bits, n, interval.start) >> (n - rest)
        ones += window.bit_count()
    return ones if state else interval.length - ones


def step(cfg: Configuration, rule: Rule) -> Configuration:
    bits = step_words(cfg.bits, cfg.n, rule.radius, minority=rule.is_minority)
    return Configuration.packed(cfg.n, bits)


def step_twice(cfg: Configuration, rule: Rule) -> Configuration:
    return step(step(cfg, rule), rule)


def complement(cfg: Configuration) -> Configuration:
    return cfg.complement()


def rotate(cfg: Configuration, k: int) -> Configuration:
    return cfg.rotate(k)


def mirror(cfg: Configuration) -> Configuration:
    return cfg.mirror()


def _cycle_of(states: list[Configuration]) -> tuple[int, int] | None:
    """Cycle ending at the last recorded state, checked after every append."""
    t = len(states) - 1
    if t >= 1 and states[t] == states[t - 1]:
        return t - 1, 1
    if t >= 2 and states[t] == states[t - 2]:
        return t - 2, 2
    return None


def simulate(cfg: Configuration, rule: Rule, steps: int) -> Trajectory:
    """Exactly `steps` applications of the rule, noting the first cycle seen."""
    states = [cfg]
    cycle = None
    for _ in range(steps):
        states.append(step(states[-1], rule))
        if cycle is None:
            cycle = _cycle_of(states)
    preperiod, period = cycle if cycle else (None, None)
    return Trajectory(
        states=tuple(states), rule=rule, preperiod=preperiod, period=period
    )


def evolve(cfg: Configuration, rule: Rule, max_steps: int | None = None) -> Trajectory:
    """Iterate until a fixed point or 2-cycle repeats.

    Stops at the first t with sigma_t == sigma_{t-1} or sigma_t == sigma_{t-2};
    the trajectory then ends one full period after its preperiod.
    """
    if max_steps is None:
        max_steps = 4 * cfg.n
    if max_steps < 1:
        raise ValueError(f"max_steps must be positive, got {max_steps}")

    states = [cfg]
    for _ in range(max_steps):
        states.append(step(states[-1], rule))
        cycle = _cycle_of(states)
        if cycle:
            preperiod, period = cycle
            return Trajectory(
                states=tuple(states), rule=rule, preperiod=preperiod, period=period
            )

    logger.error(f"No cycle of period <= 2 within {max_steps} steps for {cfg} ({rule})")
    raise BudgetExceeded(
        "Trajectory did not reach a cycle of period at most 2",
        budget=max_steps,
        what="evolve",
    )
