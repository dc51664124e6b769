import pytest
from hypothesis import given, strategies as st

from conftest import configurations
from majca.analysis.mappings import (
    alignment,
    alignment_table,
    alternating_sum,
    block_interval,
    block_length_for_periodic_pair,
    difference_sum,
    difference_vectors,
    forward_alignment,
    interval_sizes,
    iterate_alignment,
    left_right_mapping,
    make_aligned_pair,
    varsigma,
)
from majca.analysis.structure import blocks
from majca.core.automaton import Configuration, Rule, parse_configuration, step
from majca.enumeration.bruteforce import enumerate_bruteforce
from majca.exceptions import HomogeneousConfiguration, NotTemporallyPeriodic, PreconditionViolated


def periodic_rings(r: int, sizes=range(4, 13)):
    """Non-homogeneous periodic rings, repeated until intervals cannot wrap."""
    found = {}
    for n in sizes:
        for cfg in enumerate_bruteforce(n, r, workers=1):
            if not cfg.is_homogeneous():
                copies = -(-(4 * r + 2) // n)
                grown = parse_configuration(cfg.to_text(), copies)
                found[grown.to_text()] = grown
    return list(found.values())


@pytest.fixture(scope="module", params=[1, 2, 3])
def radius_and_rings(request):
    return request.param, periodic_rings(request.param)


class TestLeftRightMapping:
    def test_example(self, weakly_periodic_ring):
        nxt = step(weakly_periodic_ring, Rule.majority(2))
        left, right = left_right_mapping(weakly_periodic_ring, nxt, blocks(nxt)[0], 2)
        assert (str(left), str(right)) == ("(10,11):1", "(2,3):1")

    def test_block_must_belong_to_successor(self, weakly_periodic_ring):
        nxt = step(weakly_periodic_ring, Rule.majority(2))
        with pytest.raises(PreconditionViolated):
            left_right_mapping(weakly_periodic_ring, nxt, blocks(weakly_periodic_ring)[1], 2)

    def test_successor_required(self, weakly_periodic_ring):
        block = blocks(weakly_periodic_ring)[0]
        with pytest.raises(PreconditionViolated):
            left_right_mapping(weakly_periodic_ring, weakly_periodic_ring, block, 2)

    def test_homogeneous_successor_rejected(self):
        prev = parse_configuration("00010000000000")
        nxt = step(prev, Rule.majority(1))
        assert nxt.is_homogeneous()
        with pytest.raises(HomogeneousConfiguration):
            left_right_mapping(prev, nxt, blocks(nxt)[0], 1)
        with pytest.raises(HomogeneousConfiguration):
            alignment(prev, nxt, blocks(nxt)[0], 1)

    @given(configurations(min_n=14, max_n=60), st.integers(1, 3))
    def test_value_parity_and_injectivity(self, prev, r):
        nxt = step(prev, Rule.majority(r))
        successor_blocks = list(blocks(nxt))
        if nxt.is_homogeneous():
            with pytest.raises(HomogeneousConfiguration):
                left_right_mapping(prev, nxt, successor_blocks[0], r)
            return
        lefts, rights = [], []
        for block in successor_blocks:
            left, right = left_right_mapping(prev, nxt, block, r)
            assert left.value == block.value == right.value
            lefts.append(left)
            rights.append(right)
        assert len(set(lefts)) == len(successor_blocks)
        assert len(set(rights)) == len(successor_blocks)
        assert all(size % 2 == 1 for size in interval_sizes(prev, nxt, r))
        assert len(successor_blocks) <= blocks(prev).count


class TestBlockInterval:
    def test_ring_walk(self, weakly_periodic_ring):
        decomposition = blocks(weakly_periodic_ring)
        first, last = decomposition[5], decomposition[1]
        interval = block_interval(decomposition, first, last)
        assert [str(b) for b in interval.blocks] == ["(10,11):1", "(0,1):0", "(2,3):1"]
        assert interval.size == 3
        assert str(interval.middle) == "(0,1):0"

    def test_singleton(self, weakly_periodic_ring):
        decomposition = blocks(weakly_periodic_ring)
        interval = block_interval(decomposition, decomposition[2], decomposition[2])
        assert interval.blocks == (decomposition[2],)


class TestAlignment:
    def test_example(self, weakly_periodic_ring):
        nxt = step(weakly_periodic_ring, Rule.majority(2))
        assert str(alignment(weakly_periodic_ring, nxt, blocks(nxt)[0], 2)) == "(0,1):0"

    def test_table_on_uniform_pair(self, weakly_periodic_ring):
        nxt = step(weakly_periodic_ring, Rule.majority(2))
        assert alignment_table(weakly_periodic_ring, nxt, 2) == list(range(6))

    def test_forward_alignment_inverts(self, weakly_periodic_ring):
        nxt = step(weakly_periodic_ring, Rule.majority(2))
        for block in blocks(weakly_periodic_ring):
            image = forward_alignment(weakly_periodic_ring, nxt, block, 2)
            assert alignment(weakly_periodic_ring, nxt, image, 2) == block

    def test_forward_alignment_is_partial(self):
        prev = parse_configuration("0001")
        nxt = step(prev, Rule.majority(1))
        assert nxt.is_homogeneous()
        decomposition = blocks(prev)
        assert str(decomposition[1]) == "(3,3):1"
        assert forward_alignment(prev, nxt, decomposition[1], 1) is None
        assert forward_alignment(prev, nxt, decomposition[0], 1) == blocks(nxt)[0]

    def test_transient_pair_collides(self, mocker):
        warning = mocker.patch("majca.analysis.mappings.logger.warning")
        prev = parse_configuration("0010011")
        nxt = step(prev, Rule.majority(1))
        assert nxt.to_text() == "0000011"
        assert alignment_table(prev, nxt, 1) == [3, 3]
        decomposition = blocks(prev)
        assert str(forward_alignment(prev, nxt, decomposition[3], 1)) == "(0,4):0"
        assert warning.called
        for k in range(3):
            assert forward_alignment(prev, nxt, decomposition[k], 1) is None


class TestAlignedPair:
    def test_uniform_pair(self, weakly_periodic_ring):
        pair = make_aligned_pair(weakly_periodic_ring, 2)
        assert pair.horizon == 1
        vectors = difference_vectors(pair)
        assert set(vectors.delta) == {0}
        assert set(vectors.delta_prime) == {0}
        assert vectors.step_size == 2

    def test_alternating_pair(self):
        pair = make_aligned_pair(parse_configuration("01", 4), 1)
        assert pair.horizon == 1
        assert set(difference_vectors(pair).delta) == {0}

    def test_shifted_correspondence(self):
        pair = make_aligned_pair(parse_configuration("001101", 2), 2)
        assert pair.correspondence == (7, 0, 1, 2, 3, 4, 5, 6)
        assert pair.v.lengths == (1, 2, 2, 1, 1, 2, 2, 1)
        assert pair.v_next.lengths == (2, 1, 1, 2, 2, 1, 1, 2)
        assert pair.horizon == 1
        for k in range(pair.block_count):
            assert alternating_sum(pair, k) == pair.v_next[k]
            assert block_length_for_periodic_pair(pair, k) == pair.v_next[k]

    def test_homogeneous_rejected(self):
        with pytest.raises(HomogeneousConfiguration):
            make_aligned_pair(Configuration.homogeneous(10, 1), 2)

    def test_transient_rejected(self):
        with pytest.raises(NotTemporallyPeriodic):
            make_aligned_pair(parse_configuration("0001", 4), 1)

    def test_iterate_alignment(self, weakly_periodic_ring):
        pair = make_aligned_pair(weakly_periodic_ring, 2)
        block = blocks(pair.sigma_next)[3]
        assert iterate_alignment(pair, block, 0) == block
        assert iterate_alignment(pair, block, 1) in blocks(pair.sigma)
        assert iterate_alignment(pair, block, 2) == block
        assert iterate_alignment(pair, block, 4) == block

    def test_iterate_alignment_needs_successor_block(self, weakly_periodic_ring):
        pair = make_aligned_pair(weakly_periodic_ring, 2)
        with pytest.raises(PreconditionViolated):
            iterate_alignment(pair, blocks(pair.sigma)[0], 2)


def test_periodic_pair_laws(radius_and_rings):
    r, rings = radius_and_rings
    assert rings
    for sigma in rings:
        pair = make_aligned_pair(sigma, r)
        nxt = pair.sigma_next
        sizes = set(interval_sizes(sigma, nxt, r)) | set(interval_sizes(nxt, sigma, r))
        assert sizes == {2 * pair.horizon + 1}
        assert pair.horizon <= r
        assert sorted(pair.reverse_correspondence) == list(range(pair.block_count))
        for block in blocks(nxt):
            assert iterate_alignment(pair, block, 2) == block
        for k in range(pair.block_count):
            assert block_length_for_periodic_pair(pair, k) == pair.v_next[k]

        if max(pair.v.lengths) > r:
            continue
        for k in range(pair.block_count):
            assert alternating_sum(pair, k) == pair.v_next[k]
            assert pair.v[k] + pair.v[k + 1] == pair.v_next[k - pair.horizon] + pair.v_next[k + pair.horizon + 1]
        vectors = difference_vectors(pair)
        m = len(vectors.delta)
        for i in range(m):
            assert varsigma(pair, i, vectors) == 0
            if pair.horizon:
                assert vectors.delta[i] == vectors.delta[(i + 2 * pair.horizon) % m]


def test_difference_sums_telescope(radius_and_rings):
    r, rings = radius_and_rings
    for sigma in rings:
        if max(block.length for block in blocks(sigma)) > r:
            continue
        pair = make_aligned_pair(sigma, r)
        vectors = difference_vectors(pair)
        shift = pair.horizon + 1
        for i in range(pair.block_count):
            assert difference_sum(pair, i, 0, vectors) == 0
            for m in range(1, 2 * pair.horizon + 2):
                assert pair.v[i] + difference_sum(pair, i, m, vectors) == pair.v[i + 2 * m * shift]
            assert difference_sum(pair, i, 2 * pair.horizon, vectors) == varsigma(pair, i, vectors)
