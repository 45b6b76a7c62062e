from __future__ import annotations

import pytest

from schubkit.bpd import (
    Bpd,
    BpdBoundExceeded,
    BpdError,
    MarkedBpd,
    droop_closure,
    droop_moves,
    enumerate_bpds,
    grothendieck_via_bpd,
    grothendieck_via_mbpd_sum,
    is_reduced,
    is_valid,
    k_droop_moves,
    marked_bpds,
    mbpd_weight,
    permutation_of,
    rothe_bpd,
    validation_error,
)
from schubkit.diagram import rothe
from schubkit.orthodontia import eval_orthodontia
from schubkit.permutation import Permutation, all_permutations, length
from schubkit.polynomial import MultiPolynomial, grothendieck, to_text

P = Permutation.parse


class TestTiles:
    def test_rothe_examples(self):
        ident = rothe_bpd(Permutation.identity(3))
        assert not ident.blanks()
        assert ident.cells_of("R") == {(1, 1), (2, 2), (3, 3)}
        assert rothe_bpd(P("21")).blanks() == {(1, 1)}
        w = P("18273564")
        assert rothe_bpd(w).blanks() == rothe(w).cells

    def test_ascii_and_json(self):
        p = rothe_bpd(P("21"))
        assert p.ascii() == "·┌\n┌┼"
        assert Bpd.from_json(p.to_json()) == p
        assert p.to_json()[0] == ["Blank", "ElbowBottomRight"]

    def test_invalid_tilings(self):
        assert validation_error(Bpd(("B", "B", "B"))) == "tile count is not a square"
        assert not is_valid(Bpd.from_rows(["BB", "BB"]))
        assert not is_valid(Bpd.from_rows(["HR", "RJ"]))
        with pytest.raises(BpdError):
            permutation_of(Bpd.from_rows(["BB", "BB"]))

    def test_marks_only_on_up_elbows(self):
        assert mbpd_weight(MarkedBpd(rothe_bpd(P("21")), frozenset())) == (1, 0)
        (p,) = [q for q in enumerate_bpds(P("132")) if q.up_elbows()]
        assert p.up_elbows() == {(2, 2)}
        assert mbpd_weight(MarkedBpd(p, frozenset())) == (1, 0, 0)
        assert mbpd_weight(MarkedBpd(p, frozenset({(2, 2)}))) == (1, 1, 0)
        with pytest.raises(BpdError):
            MarkedBpd(p, frozenset({(1, 1)}))

    def test_rothe_round_trip_s5(self):
        for w in all_permutations(5):
            p = rothe_bpd(w)
            assert is_valid(p) and is_reduced(p)
            assert permutation_of(p) == w
            assert p.blanks() == rothe(w).cells


class TestEnumeration:
    def test_examples(self):
        assert len(enumerate_bpds(P("21"))) == 1
        assert len(enumerate_bpds(Permutation.identity(3))) == 1
        assert enumerate_bpds(P("132")) == droop_closure(P("132"))
        assert droop_closure(P("21")) == {rothe_bpd(P("21"))}
        with pytest.raises(BpdBoundExceeded):
            enumerate_bpds(Permutation.identity(6))

    def test_closure_matches_backtracking_s4(self):
        for w in all_permutations(4):
            assert enumerate_bpds(w) == droop_closure(w)
            reduced = {p for p in enumerate_bpds(w) if is_reduced(p)}
            assert droop_closure(w, k_theoretic=False) == reduced

    def test_blank_count_vs_length_s5(self):
        for w in all_permutations(5):
            for p in enumerate_bpds(w):
                assert permutation_of(p) == w
                assert len(p.blanks()) >= length(w)
                assert (len(p.blanks()) == length(w)) == is_reduced(p)

    def test_moves_stay_in_class(self):
        w = P("1432")
        for p in enumerate_bpds(w):
            for q in droop_moves(p) | k_droop_moves(p):
                assert is_valid(q) and permutation_of(q) == w
            for q in droop_moves(p):
                assert is_reduced(q) == is_reduced(p)

    def test_non_reduced_exists(self):
        (p,) = [q for q in enumerate_bpds(P("2143")) if not is_reduced(q)]
        assert permutation_of(p) == P("2143")
        assert len(p.blanks()) == 3


class TestGrothendieckEngine:
    def test_examples(self):
        assert to_text(grothendieck_via_bpd(P("21"))) == "x1"
        assert grothendieck_via_bpd(P("132")) == grothendieck("132")
        assert grothendieck_via_bpd(Permutation.identity(3)) == MultiPolynomial.constant(1, 3)

    def test_mbpd_weights_total(self):
        for m in marked_bpds(P("1432")):
            assert sum(mbpd_weight(m)) == len(m.bpd.blanks()) + len(m.marks)

    def test_three_engines_agree_s5(self):
        for w in all_permutations(5):
            g = grothendieck(w)
            assert grothendieck_via_bpd(w) == g
            assert eval_orthodontia(rothe(w)) == g

    def test_literal_sum_matches_s4(self):
        for w in all_permutations(4):
            assert grothendieck_via_mbpd_sum(w) == grothendieck_via_bpd(w)
