from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from schubkit.bpd import grothendieck_via_bpd
from schubkit.permutation import Permutation, all_permutations, is_dominant, lehmer_code, length
from schubkit.polynomial import (
    MultiPolynomial,
    bottom_component,
    castelnuovo_mumford,
    demazure_lascoux,
    divided_difference,
    grothendieck,
    grothendieck_via_ascent,
    homogenized_grothendieck,
    lascoux,
    leading_exponent,
    schubert,
    to_text,
    top_component,
)

from strategies import compositions, permutations

P = Permutation.parse
M = MultiPolynomial.monomial


def x(i, n):
    return MultiPolynomial.variable(i, n)


@st.composite
def polys(draw, n=3, max_deg=3, max_terms=5):
    terms = draw(st.dictionaries(
        st.tuples(*[st.integers(0, max_deg)] * n), st.integers(-4, 4), max_size=max_terms))
    return MultiPolynomial(terms, n)


class TestArithmetic:
    def test_text_and_order(self):
        f = x(1, 2) + x(2, 2) - x(1, 2) * x(2, 2)
        assert to_text(f) == "x1 + x2 - x1*x2"
        assert to_text(MultiPolynomial.zero(2)) == "0"

    def test_json_round_trip(self):
        g = grothendieck("1432")
        assert MultiPolynomial.from_json(g.to_json()) == g

    def test_leading_exponent_orders(self):
        f = M((2, 0)) + M((0, 2)) + M((1, 0))
        assert leading_exponent(f) == (2, 0)
        assert leading_exponent(f, "revlex") == (0, 2)
        with pytest.raises(ValueError):
            leading_exponent(MultiPolynomial.zero(2))

    @given(polys(), polys(), polys())
    def test_ring_axioms(self, f, g, h):
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert f - f == MultiPolynomial.zero(3)


class TestDividedDifference:
    def test_examples(self):
        assert divided_difference(x(1, 2), 1) == MultiPolynomial.constant(1, 2)
        assert divided_difference(x(1, 2) * x(2, 2), 1) == MultiPolynomial.zero(2)
        assert demazure_lascoux(M((1, 0)), 1) == M((1, 0)) + M((0, 1)) - M((1, 1))
        with pytest.raises(ValueError):
            divided_difference(x(1, 2), 2)

    @given(polys(), st.integers(1, 2))
    def test_defining_identity(self, f, i):
        # (x_i - x_{i+1}) * d_i f == f - s_i f, checked by multiplication
        n = f.num_vars
        assert (x(i, n) - x(i + 1, n)) * divided_difference(f, i) == f - f.swap(i)

    @given(polys(), st.integers(1, 2))
    def test_result_is_symmetric(self, f, i):
        d = divided_difference(f, i)
        assert d.swap(i) == d

    @given(polys(n=4, max_deg=2))
    def test_braid_and_commutation(self, f):
        d = divided_difference
        assert d(d(d(f, 1), 2), 1) == d(d(d(f, 2), 1), 2)
        assert d(d(f, 1), 3) == d(d(f, 3), 1)
        assert d(d(f, 1), 1) == MultiPolynomial.zero(4)

    @given(polys(n=4, max_deg=2))
    def test_pibar_braid(self, f):
        p = demazure_lascoux
        assert p(p(p(f, 1), 2), 1) == p(p(p(f, 2), 1), 2)
        assert p(p(f, 1), 3) == p(p(f, 3), 1)


class TestGrothendieck:
    def test_examples(self):
        assert to_text(grothendieck("132")) == "x1 + x2 - x1*x2"
        assert grothendieck("123") == MultiPolynomial.constant(1, 3)
        assert grothendieck("321") == M((2, 1, 0))
        assert to_text(castelnuovo_mumford("132")) == "-x1*x2"
        assert to_text(schubert("132")) == "x1 + x2"

    def test_lascoux_examples(self):
        assert lascoux((2, 1)) == M((2, 1))
        assert lascoux((0, 0)) == MultiPolynomial.constant(1, 2)
        assert lascoux((0, 1)) == M((1, 0)) + M((0, 1)) - M((1, 1))
        with pytest.raises(ValueError):
            lascoux((1, -1))

    def test_homogenized_example(self):
        h = homogenized_grothendieck("132")
        assert to_text(h, ["x1", "x2", "x3", "z"]) == "x1*x2 + x1*z + x2*z"

    def test_path_independence_s5(self):
        for w in all_permutations(5):
            for i in range(1, w.n):
                if w(i) < w(i + 1):
                    assert grothendieck_via_ascent(w, i) == grothendieck(w)

    def test_matches_bpd_oracle_s5(self):
        for w in all_permutations(5):
            assert grothendieck_via_bpd(w) == grothendieck(w)

    @given(permutations(1, 6))
    def test_bottom_is_schubert(self, w):
        g = grothendieck(w)
        assert bottom_component(g) == schubert(w)
        assert g.min_degree() == length(w)

    @given(permutations(1, 6))
    def test_sign_alternation(self, w):
        g = grothendieck(w)
        ell = length(w)
        assert all((c > 0) == ((sum(e) - ell) % 2 == 0) for e, c in g.terms.items())
        h = homogenized_grothendieck(w)
        assert all(c > 0 for c in h.terms.values())
        assert len({sum(e) for e in h.terms}) == 1

    @given(permutations(1, 6))
    def test_top_component_degree(self, w):
        g = grothendieck(w)
        assert top_component(g).min_degree() == g.degree()

    def test_schubert_positive_s6(self):
        for w in all_permutations(6):
            assert all(c > 0 for c in schubert(w).terms.values())

    def test_grothendieck_dominant_is_lascoux_of_code(self):
        # dominant permutations: Grothendieck is the monomial of the code
        for w in all_permutations(5):
            if is_dominant(w):
                assert grothendieck(w) == M(lehmer_code(w))
                assert lascoux(lehmer_code(w)) == grothendieck(w)

    @given(compositions(4, 3))
    def test_lascoux_bottom_is_monomial_positive(self, alpha):
        f = lascoux(alpha)
        assert f.coefficient(alpha) == 1
        assert f.min_degree() == sum(alpha)
        assert all(c > 0 for c in bottom_component(f).terms.values())
