"""
Bit-sliced majority kernel.

A configuration of ring size n is packed into one word with cell 0 as the most
significant of its n bits. Every function here accepts either a single word
(a Python ``int``, any n) or a numpy ``uint64`` array holding many
configurations of the same ring size (n <= 64), and returns the same kind.

The majority of the 2r+1 neighborhood planes is computed with a ripple
counter over bit slices, so one call updates every cell of every word at once.
"""

from typing import TypeAlias

import numpy as np

Words: TypeAlias = int | np.ndarray

MAX_PACKED_N = 64


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _const(value: int, like: Words) -> Words:
    if isinstance(like, np.ndarray):
        return np.uint64(value)
    return value


def _zeros(like: Words) -> Words:
    if isinstance(like, np.ndarray):
        return np.zeros_like(like)
    return 0


def rotate_left(words: Words, n: int, k: int) -> Words:
    """Rotate so that cell i of the result holds cell i+k of the input."""
    k %= n
    if k == 0:
        return words
    mask = _const(full_mask(n), words)
    left = _const(k, words)
    right = _const(n - k, words)
    return ((words << left) | (words >> right)) & mask


def complement_words(words: Words, n: int) -> Words:
    return words ^ _const(full_mask(n), words)


def _at_least(counters: list[Words], threshold: int, mask: Words) -> Words:
    greater = _zeros(counters[0])
    equal = mask
    for k in reversed(range(len(counters))):
        slice_k = counters[k]
        if (threshold >> k) & 1:
            equal = equal & slice_k
        else:
            greater = greater | (equal & slice_k)
            equal = equal & (slice_k ^ mask)
    return greater | equal


def majority_words(words: Words, n: int, r: int) -> Words:
    """One synchronous majority step with radius r on every packed word.

    Offsets beyond the ring wrap with multiplicity: offset d reads cell
    (i + d) mod n, so a ring shorter than 2r+1 counts some cells twice.
    """
    mask = _const(full_mask(n), words)
    width = (2 * r + 1).bit_length()
    counters = [_zeros(words) for _ in range(width)]
    for offset in range(-r, r + 1):
        carry = rotate_left(words, n, offset)
        for k in range(width):
            counters[k], carry = counters[k] ^ carry, counters[k] & carry
    return _at_least(counters, r + 1, mask)


def step_words(words: Words, n: int, r: int, minority: bool = False) -> Words:
    out = majority_words(words, n, r)
    if minority:
        out = complement_words(out, n)
    return out


def homogeneous_run_words(words: Words, n: int, length: int) -> Words:
    """Cells that start a run of at least `length` equal states (cyclically)."""
    ones = words
    zeros = complement_words(words, n)
    for offset in range(1, length):
        ones = ones & rotate_left(words, n, offset)
        zeros = zeros & rotate_left(complement_words(words, n), n, offset)
    return ones | zeros


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primitive_words(words: np.ndarray, n: int) -> np.ndarray:
    """Boolean mask of the words whose spatial period is exactly n."""
    keep = np.ones(words.shape, dtype=bool)
    for d in divisors(n)[:-1]:
        keep &= rotate_left(words, n, d) != words
    return keep


def unpack_words(words: np.ndarray, n: int) -> np.ndarray:
    """Expand packed words into an (len(words), n) uint8 array of cells."""
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    return ((words[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
