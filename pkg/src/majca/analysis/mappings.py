"""
Block mappings between a configuration and its majority successor.

For a block [i, j] of the successor, the left mapping picks the predecessor
block holding cell j-r and the right mapping the one holding cell i+r. The
blocks walked from the first to the second form an odd-sized block interval;
its middle block is the alignment of [i, j]. On a temporally periodic pair the
alignment is a bijection in both directions and lines the two block-length
vectors up index by index, which is what `AlignedPair` materializes.
"""

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from majca.analysis.structure import (
    Block,
    BlockDecomposition,
    BlockLengthVector,
    block_length_vector,
    blocks,
)
from majca.core.automaton import Configuration, Rule, step
from majca.exceptions import (
    HomogeneousConfiguration,
    NotTemporallyPeriodic,
    PreconditionViolated,
)


class BlockInterval(BaseModel):
    model_config = ConfigDict(frozen=True)

    blocks: tuple[Block, ...]

    @property
    def size(self) -> int:
        return len(self.blocks)

    @property
    def middle(self) -> Block:
        return self.blocks[len(self.blocks) // 2]

    def __len__(self) -> int:
        return len(self.blocks)


class AlignedPair(BaseModel):
    """A temporally periodic pair with its block-length vectors aligned.

    Block k of `sigma_next` aligns to block `correspondence[k]` of `sigma`;
    `v` lists the lengths of the sigma blocks in that order, so v[k] and
    v_next[k] belong to aligned blocks.
    """

    model_config = ConfigDict(frozen=True)

    sigma: Configuration
    sigma_next: Configuration
    radius: int = Field(ge=1)
    v: BlockLengthVector
    v_next: BlockLengthVector
    correspondence: tuple[int, ...]
    reverse_correspondence: tuple[int, ...]
    horizon: int = Field(ge=0)

    @property
    def block_count(self) -> int:
        return len(self.correspondence)


class DifferenceVectors(BaseModel):
    model_config = ConfigDict(frozen=True)

    delta: tuple[int, ...]
    delta_prime: tuple[int, ...]
    step_size: int = Field(ge=1)


def _require_successor(prev: Configuration, next: Configuration, r: int, operation: str):
    if prev.n != next.n or next != step(prev, Rule.majority(r)):
        raise PreconditionViolated(
            f"{next} is not the majority r={r} successor of {prev}",
            operation=operation,
        )


def _require_block(decomposition: BlockDecomposition, block: Block, operation: str):
    if block not in decomposition:
        raise PreconditionViolated(
            f"Block {block} is not a block of {decomposition.config}",
            operation=operation,
        )


def _require_blocks(next: Configuration, operation: str):
    if next.is_homogeneous():
        raise HomogeneousConfiguration(
            f"Successor {next} is a single block",
            config=str(next),
            operation=operation,
        )


def mapped_indices(
    prev_blocks: BlockDecomposition, block: Block, r: int
) -> tuple[int, int]:
    i, j = block.start, block.start + block.length - 1
    return prev_blocks.index_of_cell(j - r), prev_blocks.index_of_cell(i + r)


def _walk(decomposition: BlockDecomposition, first: int, last: int) -> list[int]:
    count = decomposition.count
    return [(first + k) % count for k in range((last - first) % count + 1)]


def aligned_index(prev_blocks: BlockDecomposition, block: Block, r: int) -> int:
    left, right = mapped_indices(prev_blocks, block, r)
    walk = _walk(prev_blocks, left, right)
    return walk[len(walk) // 2]


def block_interval_size(prev_blocks: BlockDecomposition, block: Block, r: int) -> int:
    left, right = mapped_indices(prev_blocks, block, r)
    return (right - left) % prev_blocks.count + 1


def left_right_mapping(
    prev: Configuration, next: Configuration, block: Block, r: int
) -> tuple[Block, Block]:
    _require_successor(prev, next, r, "left_right_mapping")
    _require_blocks(next, "left_right_mapping")
    _require_block(blocks(next), block, "left_right_mapping")
    prev_blocks = blocks(prev)
    left, right = mapped_indices(prev_blocks, block, r)
    return prev_blocks[left], prev_blocks[right]


def block_interval(
    decomposition: BlockDecomposition, first: Block, last: Block
) -> BlockInterval:
    """Blocks met walking forward through the ring from `first` to `last`."""
    start = decomposition.index_of(first)
    stop = decomposition.index_of(last)
    walk = _walk(decomposition, start, stop)
    return BlockInterval(blocks=tuple(decomposition[k] for k in walk))


def alignment(prev: Configuration, next: Configuration, block: Block, r: int) -> Block:
    _require_successor(prev, next, r, "alignment")
    _require_blocks(next, "alignment")
    _require_block(blocks(next), block, "alignment")
    prev_blocks = blocks(prev)
    return prev_blocks[aligned_index(prev_blocks, block, r)]


def alignment_table(prev: Configuration, next: Configuration, r: int) -> list[int]:
    """Aligned prev-block index for every block of next, in next's block order."""
    _require_successor(prev, next, r, "alignment_table")
    prev_blocks = blocks(prev)
    return [aligned_index(prev_blocks, block, r) for block in blocks(next)]


def forward_alignment(
    prev: Configuration, next: Configuration, block: Block, r: int
) -> Block | None:
    """The block of next whose alignment is `block`, or None when nothing maps there.

    A single-block successor is accepted here. On a transient pair several
    blocks of next may align to the same block of prev (0010011 -> 0000011 at
    r=1 aligns both to block 3); the first of them in block order is returned
    and the collision is logged as a warning.
    """
    _require_successor(prev, next, r, "forward_alignment")
    prev_blocks = blocks(prev)
    target = prev_blocks.index_of(block)
    inverse: dict[int, Block] = {}
    for successor_block in blocks(next):
        aligned = aligned_index(prev_blocks, successor_block, r)
        if aligned in inverse:
            logger.warning(
                f"Blocks {inverse[aligned]} and {successor_block} of {next} "
                f"align to the same block of {prev}"
            )
            continue
        inverse[aligned] = successor_block
    return inverse.get(target)


def interval_sizes(prev: Configuration, next: Configuration, r: int) -> list[int]:
    """Size of the left-to-right block interval of every block of next."""
    _require_successor(prev, next, r, "interval_sizes")
    prev_blocks = blocks(prev)
    return [block_interval_size(prev_blocks, block, r) for block in blocks(next)]


def make_aligned_pair(sigma: Configuration, r: int) -> AlignedPair:
    rule = Rule.majority(r)
    if sigma.is_homogeneous():
        raise HomogeneousConfiguration(
            "An aligned pair needs at least two blocks",
            config=str(sigma),
            operation="make_aligned_pair",
        )
    sigma_next = step(sigma, rule)
    if step(sigma_next, rule) != sigma:
        raise NotTemporallyPeriodic(
            "Configuration is transient under the majority rule",
            config=str(sigma),
            operation="make_aligned_pair",
        )

    sigma_blocks, next_blocks = blocks(sigma), blocks(sigma_next)
    forward = [aligned_index(sigma_blocks, block, r) for block in next_blocks]
    backward = [aligned_index(next_blocks, block, r) for block in sigma_blocks]
    if sorted(forward) != list(range(sigma_blocks.count)):
        raise PreconditionViolated(
            f"Alignment of {sigma_next} onto {sigma} is not a bijection",
            operation="make_aligned_pair",
        )

    first = sigma_blocks[forward[0]]
    v = BlockLengthVector(
        lengths=tuple(sigma_blocks[k].length for k in forward),
        start_value=first.value,
        anchor=first.start,
    )
    horizon = (block_interval_size(sigma_blocks, next_blocks[0], r) - 1) // 2
    logger.debug(f"Aligned {sigma} with {sigma_next}: horizon {horizon}")
    return AlignedPair(
        sigma=sigma,
        sigma_next=sigma_next,
        radius=r,
        v=v,
        v_next=block_length_vector(sigma_next),
        correspondence=tuple(forward),
        reverse_correspondence=tuple(backward),
        horizon=horizon,
    )


def iterate_alignment(pair: AlignedPair, block: Block, k: int) -> Block:
    """Apply the alignment k times starting from a block of sigma_next.

    Odd applications map sigma_next onto sigma and even ones map back, so an
    even k returns a block of sigma_next and an odd k a block of sigma.
    """
    if k < 0:
        raise PreconditionViolated(f"k must be nonnegative, got {k}", operation="iterate_alignment")
    sigma_blocks, next_blocks = blocks(pair.sigma), blocks(pair.sigma_next)
    if block not in next_blocks:
        raise PreconditionViolated(
            f"Block {block} is not a block of {pair.sigma_next}",
            operation="iterate_alignment",
        )
    index, on_next = next_blocks.index_of(block), True
    for _ in range(k):
        if on_next:
            index = pair.correspondence[index]
        else:
            index = pair.reverse_correspondence[index]
        on_next = not on_next
    return next_blocks[index] if on_next else sigma_blocks[index]


def _require_weakly_stable(pair: AlignedPair, operation: str):
    longest = max(max(pair.v.lengths), max(pair.v_next.lengths))
    if longest > pair.radius:
        raise PreconditionViolated(
            f"Pair has a block of length {longest} > r={pair.radius}",
            operation=operation,
        )


def difference_vectors(pair: AlignedPair) -> DifferenceVectors:
    _require_weakly_stable(pair, "difference_vectors")
    v, w, shift = pair.v, pair.v_next, pair.horizon + 1
    m = len(v)
    return DifferenceVectors(
        delta=tuple(w[i + shift] - v[i] for i in range(m)),
        delta_prime=tuple(v[i + shift] - w[i] for i in range(m)),
        step_size=shift,
    )


def difference_sum(
    pair: AlignedPair, i: int, m: int, vectors: DifferenceVectors | None = None
) -> int:
    """Sum of m pairs of difference terms stepping by horizon+1 from index i.

    Telescopes to v[i + 2*m*(horizon+1)] - v[i].
    """
    vectors = vectors or difference_vectors(pair)
    delta, delta_prime = vectors.delta, vectors.delta_prime
    size, shift = len(delta), vectors.step_size
    total = 0
    for j in range(m):
        total += delta[(i + 2 * j * shift) % size]
        total += delta_prime[(i + (2 * j + 1) * shift) % size]
    return total


def varsigma(pair: AlignedPair, i: int, vectors: DifferenceVectors | None = None) -> int:
    return difference_sum(pair, i, 2 * pair.horizon, vectors)


def alternating_sum(pair: AlignedPair, k: int) -> int:
    """Signed sum of the 2*horizon+1 sigma blocks around aligned index k."""
    delta = pair.horizon
    return sum((-1) ** (j + delta) * pair.v[k + j] for j in range(-delta, delta + 1))


def block_length_for_periodic_pair(pair: AlignedPair, k: int) -> int:
    """Length of block k of sigma_next from the sigma blocks between its left
    and right mappings, counting blocks of its own value positively."""
    sigma_blocks = blocks(pair.sigma)
    block = blocks(pair.sigma_next)[k]
    left, right = mapped_indices(sigma_blocks, block, pair.radius)
    total = 0
    for index in _walk(sigma_blocks, left, right):
        member = sigma_blocks[index]
        total += member.length if member.value == block.value else -member.length
    return total
