from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from schubkit.diagram import rothe, weight
from schubkit.permutation import (
    ChainWitness,
    ConsistencyError,
    Permutation,
    all_permutations,
    chain_decomposition,
    contains_pattern,
    contains_pattern_bruteforce,
    decreasing_runs,
    flatten,
    inverse,
    is_almost_vexillary,
    is_almost_vexillary_by_patterns,
    is_almost_vexillary_structural,
    is_dominant,
    is_fireworks,
    is_valid_chain_witness,
    is_vexillary,
    lehmer_code,
    length,
)

from strategies import permutations

P = Permutation.parse


class TestBasics:
    def test_parse_forms(self):
        assert P("2143") == P("2,1,4,3") == Permutation((2, 1, 4, 3))

    @pytest.mark.parametrize("bad", ["", "1x", "113", "0,1"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            P(bad)

    def test_inverse_examples(self):
        assert inverse(Permutation.identity(4)) == Permutation.identity(4)
        assert inverse(P("21")) == P("21")
        assert inverse(P("231")) == P("312")

    def test_length_examples(self):
        assert length(P("21")) == 1
        assert length(Permutation.identity(5)) == 0
        assert length(P("18273564")) == 12

    def test_lehmer_code_examples(self):
        assert lehmer_code(Permutation.identity(3)) == (0, 0, 0)
        assert lehmer_code(P("321")) == (2, 1, 0)
        assert lehmer_code(P("1624735")) == (0, 4, 0, 1, 2, 0, 0)

    def test_all_permutations_counts(self):
        assert [len(all_permutations(n)) for n in range(1, 6)] == [1, 2, 6, 24, 120]


class TestPatterns:
    def test_examples(self):
        assert contains_pattern(P("2143"), "2143")
        assert not contains_pattern(P("1624735"), "2143")
        assert contains_pattern(P("13254"), "132")

    @given(permutations(1, 7), permutations(1, 4))
    def test_matches_bruteforce(self, w, p):
        assert contains_pattern(w, p) == contains_pattern_bruteforce(w.images, p.images)

    def test_monotone_under_subpatterns(self):
        rng = random.Random(5)
        for _ in range(200):
            w = Permutation(tuple(rng.sample(range(1, 8), 7)))
            p = Permutation(tuple(rng.sample(range(1, 5), 4)))
            sub = flatten(p.images[:3])
            if contains_pattern(w, p):
                assert contains_pattern(w, sub)


class TestClasses:
    def test_examples(self):
        assert is_vexillary(P("13542"))
        assert not is_vexillary(P("2143"))
        assert is_dominant(P("321"))
        assert is_fireworks((7, 6, 9, 8))
        assert is_fireworks(Permutation.identity(4))
        assert not is_fireworks(P("21534"))
        assert decreasing_runs(P("21534").images) == [(2, 1), (5, 3), (4,)]

    def test_almost_vexillary_examples(self):
        assert is_almost_vexillary(P("31542"))
        assert is_almost_vexillary(P("13542"))
        assert not is_almost_vexillary(P("13254"))

    def test_vexillary_implies_almost_vexillary(self):
        for w in all_permutations(6):
            if is_vexillary(w):
                assert is_almost_vexillary(w)

    def test_pattern_and_structure_agree_s6(self):
        for w in all_permutations(6):
            assert is_almost_vexillary_by_patterns(w) == is_almost_vexillary_structural(w)

    def test_consistency_error_type(self):
        assert issubclass(ConsistencyError, AssertionError)

    @given(permutations(1, 7))
    def test_length_and_code_match_rothe(self, w):
        d = rothe(w)
        assert length(w) == len(d.cells)
        assert lehmer_code(w) == tuple(weight(d)) + (0,) * (w.n - len(weight(d)))


class TestChains:
    def test_nine_letter_example(self):
        w = P("769821534")
        c = chain_decomposition(w)
        assert c is not None and is_valid_chain_witness(w, c)
        assert c.blocks(w) == [(7, 6, 9, 8), (2, 1), (5, 3, 4)]
        assert c.block_minima == (6, 1, 3)
        assert c.cut_points == (1, 5, 7, 10)

    def test_vexillary_is_single_block(self):
        for w in all_permutations(5):
            if is_vexillary(w):
                assert chain_decomposition(w).cut_points == (1, w.n + 1)

    def test_2143_is_a_single_fireworks_block(self):
        # 2143 has runs (21)(43) with increasing initials, so one block suffices
        c = chain_decomposition(P("2143"))
        assert c.cut_points == (1, 5) and c.block_kinds == ("fireworks",)
        two = ChainWitness((1, 3, 5), ("vexillary", "vexillary"), (1, 3))
        assert is_valid_chain_witness(P("2143"), two)

    def test_invalid_witnesses(self):
        w = P("769821534")
        assert not is_valid_chain_witness(w, ChainWitness((1, 10), ("vexillary",), (1,)))
        assert not is_valid_chain_witness(w, ChainWitness((1, 4, 10), ("fireworks", "vexillary"), (6, 1)))

    @given(permutations(1, 6))
    def test_found_witnesses_are_valid(self, w):
        c = chain_decomposition(w)
        if c is not None:
            assert is_valid_chain_witness(w, c)

    @given(st.integers(1, 6))
    def test_dominant_perms_are_chains(self, n):
        for w in all_permutations(n):
            if is_dominant(w):
                assert chain_decomposition(w) is not None
