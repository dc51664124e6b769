import pytest

from majca.core.automaton import Configuration, Rule, parse_configuration, step
from majca.enumeration.bruteforce import chunk_bounds, enumerate_bruteforce, periodic_words
from majca.enumeration.canonical import canonicalize, symmetry_orbit
from majca.enumeration.patterns import (
    GeneratorSet,
    enumerate_from_patterns,
    generate_patterns,
    strongly_stable_family,
)
from majca.exceptions import BudgetExceeded

GOLDEN_GENERATORS = {
    1: ["01"],
    2: ["01", "0011", "001101", "001011"],
    3: [
        "01", "0011", "010011", "010110", "001110", "01011001", "10100101",
        "10100110", "01011100", "10010011", "00011101", "10110001",
        "0011001110", "1000111001",
    ],
}


def canonical_classes(patterns) -> set[str]:
    return {canonicalize(parse_configuration(p)).representative.to_text() for p in patterns}


@pytest.fixture(scope="module")
def generator_sets() -> dict[int, GeneratorSet]:
    return {r: generate_patterns(r) for r in (1, 2, 3)}


class TestBruteForce:
    def test_ring_of_four(self):
        found = [cfg.to_text() for cfg in enumerate_bruteforce(4, 1)]
        assert found == ["0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"]

    def test_odd_ring(self):
        assert [cfg.to_text() for cfg in enumerate_bruteforce(3, 1)] == ["000", "111"]

    def test_ring_of_five(self):
        assert len(enumerate_bruteforce(5, 1)) == 12

    def test_only_homogeneous(self):
        assert [cfg.to_text() for cfg in enumerate_bruteforce(5, 2)] == ["00000", "11111"]

    def test_minority_has_the_same_set(self):
        assert enumerate_bruteforce(10, 2, Rule.minority(2)) == enumerate_bruteforce(10, 2)

    def test_matches_direct_steps(self):
        rule = Rule.majority(2)
        expected = [
            Configuration.packed(9, bits)
            for bits in range(1 << 9)
            if step(step(Configuration.packed(9, bits), rule), rule) == Configuration.packed(9, bits)
        ]
        assert enumerate_bruteforce(9, 2) == expected

    def test_worker_count_does_not_change_output(self):
        inline = periodic_words(12, 2, workers=1, chunk_bits=5)
        pooled = periodic_words(12, 2, workers=2, chunk_bits=5)
        assert inline.tolist() == pooled.tolist()

    def test_chunk_bounds_cover_the_index_space(self):
        bounds = chunk_bounds(10, 4)
        assert bounds[0] == (0, 16)
        assert bounds[-1][1] == 1 << 10
        assert all(a[1] == b[0] for a, b in zip(bounds, bounds[1:]))

    def test_budget(self, mocker):
        mocker.patch("majca.enumeration.bruteforce.settings.bruteforce_max_n", 8)
        with pytest.raises(BudgetExceeded):
            enumerate_bruteforce(9, 1)


class TestCanonical:
    def test_rotation(self):
        assert canonicalize(parse_configuration("1010")).representative.to_text() == "01" * 2

    def test_mirror_and_complement_classes(self):
        target = canonicalize(parse_configuration("010011")).representative
        assert canonicalize(parse_configuration("110010")).representative == target
        assert canonicalize(parse_configuration("101100")).representative == target

    def test_orbit_size(self):
        form = canonicalize(parse_configuration("0011"))
        assert form.symmetry_class_size == 4
        assert len(symmetry_orbit(parse_configuration("0001"))) == 8


class TestGenerators:
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_golden_lists(self, generator_sets, r):
        assert set(generator_sets[r].generators) == canonical_classes(GOLDEN_GENERATORS[r])

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_generators_are_short_and_periodic(self, generator_sets, r):
        rule = Rule.majority(r)
        for pattern in generator_sets[r].generators:
            assert len(pattern) <= 2 * r * (r + 1)
            for copies in (1, 2, 3):
                cfg = parse_configuration(pattern, copies)
                assert step(step(cfg, rule), rule) == cfg

    def test_radius_budget(self, mocker):
        mocker.patch("majca.enumeration.patterns.settings.pattern_max_radius", 2)
        with pytest.raises(BudgetExceeded):
            generate_patterns(3)


class TestPatternEnumeration:
    def test_ring_of_four(self, generator_sets):
        assert enumerate_from_patterns(4, 1, generator_sets[1]) == enumerate_bruteforce(4, 1)

    def test_homogeneous_only(self, generator_sets):
        found = enumerate_from_patterns(5, 2, generator_sets[2])
        assert [cfg.to_text() for cfg in found] == ["00000", "11111"]

    def test_includes_generator_rotations(self, generator_sets):
        found = set(enumerate_from_patterns(18, 3, generator_sets[3]))
        base = parse_configuration("010011", 3)
        assert {base.rotate(k) for k in range(18)} <= found

    def test_strongly_stable_family(self):
        family = {cfg.to_text() for cfg in strongly_stable_family(6, 1)}
        assert "000111" in family and "001111" in family
        assert "010111" not in family

    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("n", range(3, 19))
    def test_matches_bruteforce(self, generator_sets, n, r):
        assert set(enumerate_from_patterns(n, r, generator_sets[r])) == set(enumerate_bruteforce(n, r, workers=1))
