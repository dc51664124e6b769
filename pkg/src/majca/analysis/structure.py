"""
Block decomposition of a ring and the switch-point and block-length formulas
that relate a configuration to its successor under the majority rule.
"""

from bisect import bisect_right

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from majca.core.automaton import (
    CellInterval,
    Configuration,
    Rule,
    count_states,
    step,
)
from majca.core.kernel import rotate_left
from majca.exceptions import PreconditionViolated


class Block(BaseModel):
    """A maximal homogeneous block [start, end] holding `value`."""

    model_config = ConfigDict(frozen=True)

    interval: CellInterval
    value: int = Field(ge=0, le=1)

    @property
    def start(self) -> int:
        return self.interval.start

    @property
    def end(self) -> int:
        return self.interval.end

    @property
    def length(self) -> int:
        return self.interval.length

    def __contains__(self, cell: int) -> bool:
        return cell in self.interval

    def __str__(self) -> str:
        return f"({self.start},{self.end}):{self.value}"


class BlockDecomposition(BaseModel):
    """Blocks in ring order, block 0 being the one that contains cell 0."""

    model_config = ConfigDict(frozen=True)

    config: Configuration
    blocks: tuple[Block, ...]

    @property
    def count(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return self.config.n

    _offsets: list[int] = PrivateAttr(default_factory=list)
    _by_start: dict[int, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        first = self.blocks[0].start
        self._offsets = [(block.start - first) % self.n for block in self.blocks]
        self._by_start = {block.start: k for k, block in enumerate(self.blocks)}

    def index_of_cell(self, cell: int) -> int:
        offset = (cell - self.blocks[0].start) % self.n
        return bisect_right(self._offsets, offset) - 1

    def block_at(self, cell: int) -> Block:
        return self.blocks[self.index_of_cell(cell)]

    def index_of(self, block: Block) -> int:
        k = self._by_start.get(block.start)
        if k is None or self.blocks[k] != block:
            raise PreconditionViolated(
                f"Block {block} is not a block of {self.config}",
                operation="block lookup",
            )
        return k

    def __contains__(self, block: Block) -> bool:
        k = self._by_start.get(block.start)
        return k is not None and self.blocks[k] == block

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, k: int) -> Block:
        return self.blocks[k % len(self.blocks)]


class BlockLengthVector(BaseModel):
    model_config = ConfigDict(frozen=True)

    lengths: tuple[int, ...]
    start_value: int = Field(ge=0, le=1)
    anchor: int = Field(ge=0)

    @model_validator(mode="after")
    def _valid_lengths(self):
        if not self.lengths or any(length < 1 for length in self.lengths):
            raise ValueError("block lengths must be positive")
        if len(self.lengths) > 1 and len(self.lengths) % 2:
            raise ValueError("a ring with several blocks has an even number of them")
        if self.anchor >= sum(self.lengths):
            raise ValueError("anchor must be a cell of the ring")
        return self

    @property
    def n(self) -> int:
        return sum(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def __getitem__(self, k: int) -> int:
        return self.lengths[k % len(self.lengths)]


def switch_points(cfg: Configuration) -> list[tuple[int, int]]:
    n = cfg.n
    changes = cfg.bits ^ rotate_left(cfg.bits, n, 1)
    return [(i, (i + 1) % n) for i in range(n) if (changes >> (n - 1 - i)) & 1]


def blocks(cfg: Configuration) -> BlockDecomposition:
    n = cfg.n
    if cfg.is_homogeneous():
        only = Block(interval=CellInterval.between(0, n - 1, n), value=cfg[0])
        return BlockDecomposition(config=cfg, blocks=(only,))

    starts = sorted(j for _, j in switch_points(cfg))
    if starts[0] != 0:
        # the last block wraps over cell 0
        starts = [starts[-1]] + starts[:-1]
    found = []
    for k, start in enumerate(starts):
        end = starts[(k + 1) % len(starts)] - 1
        found.append(
            Block(interval=CellInterval.between(start, end, n), value=cfg[start])
        )
    return BlockDecomposition(config=cfg, blocks=tuple(found))


def block_length_vector(cfg: Configuration) -> BlockLengthVector:
    decomposition = blocks(cfg)
    first = decomposition.blocks[0]
    return BlockLengthVector(
        lengths=tuple(block.length for block in decomposition),
        start_value=first.value,
        anchor=first.start,
    )


def reconstruct(vector: BlockLengthVector) -> Configuration:
    n = vector.n
    cells = [0] * n
    position, value = vector.anchor, vector.start_value
    for length in vector.lengths:
        for offset in range(length):
            cells[(position + offset) % n] = value
        position += length
        value ^= 1
    return Configuration.from_cells(cells)


def configurations_for_lengths(lengths) -> list[Configuration]:
    """The configurations, up to rotation, whose block-length vector is `lengths`.

    There are two value assignments; they coincide up to rotation when the
    vector is an odd-length vector written twice.
    """
    lengths = tuple(lengths)
    found: list[Configuration] = []
    for start_value in (0, 1):
        cfg = reconstruct(
            BlockLengthVector(lengths=lengths, start_value=start_value, anchor=0)
        )
        text = cfg.to_text()
        if not any(text in other.to_text() * 2 for other in found):
            found.append(cfg)
    return found


def bias(cfg: Configuration, interval: CellInterval) -> int:
    return count_states(cfg, interval, 0) - count_states(cfg, interval, 1)


def whole_ring(cfg: Configuration) -> CellInterval:
    return CellInterval.between(0, cfg.n - 1, cfg.n)


def switch_points_within(cfg: Configuration, interval: CellInterval) -> int:
    """Number of switch points (c, c+1) with both cells inside `interval`."""
    cells = [cfg[c] for c in range(interval.start, interval.start + interval.length)]
    return sum(1 for a, b in zip(cells, cells[1:]) if a != b)


def _require_successor(prev: Configuration, next: Configuration, r: int, operation: str):
    if next != step(prev, Rule.majority(r)):
        raise PreconditionViolated(
            f"{next} is not the majority r={r} successor of {prev}",
            operation=operation,
        )


def predict_block_length(
    prev: Configuration, next: Configuration, block: Block, r: int
) -> int:
    """Length of a block of `next` counted back from `prev`.

    For a block [i, j] of value b and length at most 2r+1 this is the number
    of b cells of prev[i-r, j+r] minus the number of non-b cells of
    prev[j-r, i+r].
    """
    _require_successor(prev, next, r, "predict_block_length")
    decomposition = blocks(next)
    if block not in decomposition:
        raise PreconditionViolated(
            f"Block {block} is not a block of {next}", operation="predict_block_length"
        )
    if decomposition.count < 2:
        raise PreconditionViolated(
            "The successor is homogeneous and has no bounding switch points",
            operation="predict_block_length",
        )
    if block.length > 2 * r + 1:
        raise PreconditionViolated(
            f"Block {block} is longer than {2 * r + 1}",
            operation="predict_block_length",
        )

    n, i = prev.n, block.start
    j = i + block.length - 1
    inner = count_states(prev, CellInterval.span(i - r, j + r, n), block.value)
    outer = count_states(prev, CellInterval.span(j - r, i + r, n), 1 - block.value)
    return inner - outer


def predict_switch_point(prev: Configuration, i: int, r: int) -> tuple[int, int] | None:
    """Switch point forced at (i, i+1) of the successor, if prev guarantees one."""
    n = prev.n
    window = CellInterval.span(i - r + 1, i + r, n)
    if bias(prev, window) != 0:
        return None
    left, right = prev[i - r], prev[i + 1 + r]
    if left == right:
        return None
    return left, right
