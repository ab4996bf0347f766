from __future__ import annotations

import pytest

from deletion_order.coxeter import reduced_words
from deletion_order.normal_forms import (
    coset_decompose, compare_elements, nf_delta_oracle, nf_rlex, normal_form, sort_elements,
)
from deletion_order.words import Order, compare_deletion, compare_lex

from support import system


def test_examples():
    a2, a3 = system("A2"), system("A3")
    by_image = {a2.image(g): g for g in a2.elements()}
    assert nf_rlex(a2, by_image[(2, 3, 1)]) == (2, 1)
    assert nf_rlex(a2, a2.identity) == ()
    assert nf_rlex(a3, a3.element((3, 2, 1, 3, 2, 3))) == (1, 2, 3, 1, 2, 1)
    assert nf_delta_oracle(a2, a2.element((2, 1, 2))) == (1, 2, 1)
    assert nf_delta_oracle(a3, a3.element((1, 3))) == (3, 1)


@pytest.mark.parametrize("name", ["A3", "B3", "I2(7)"])
def test_rlex_is_rtl_least_reduced_word(name):
    sys_ = system(name)
    for g in sys_.elements():
        nf = nf_rlex(sys_, g)
        words = reduced_words(sys_, g)
        assert nf in words
        assert all(compare_lex(nf, w, "rtl") != Order.GREATER for w in words)
        assert len(nf) == sys_.length(g)


def test_normal_form_record():
    b2 = system("B2")
    g = b2.element((2, 1, 2))
    for kind in ("rlex", "delta"):
        nf = normal_form(b2, g, kind)
        assert b2.element(nf.word) == g and len(nf.word) == b2.length(g)
    with pytest.raises(ValueError):
        normal_form(b2, g, "lex")


def test_compare_elements():
    a2 = system("A2")
    e = a2.identity
    assert compare_elements(a2, a2.element((2, 1)), a2.element((1, 2))) == Order.LESS
    for g in a2.elements():
        assert compare_elements(a2, g, g) == Order.EQUAL
        if g != e:
            assert compare_elements(a2, e, g) == Order.LESS


def test_sym4_order():
    a3 = system("A3")
    got = [nf_rlex(a3, g) for g in sort_elements(a3)]
    assert got[6] == (3,) and got[12] == (2, 3) and got[18] == (1, 2, 3)
    assert got[-1] == (1, 2, 3, 1, 2, 1)


def test_coset_decomposition_example():
    a3 = system("A3")
    dec = coset_decompose(a3, a3.element((2, 3, 1, 2, 1)))
    assert dec.words == ((2, 3), (1, 2), (1,))
    assert dec.factor(3) == a3.element((2, 3))


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "I2(6)"])
def test_coset_decomposition_properties(name):
    sys_ = system(name)
    n = sys_.rank
    seen = set()
    for g in sys_.elements():
        dec = coset_decompose(sys_, g)
        prod = sys_.identity
        for f in dec.factors:
            prod = sys_.multiply(prod, f)
        assert prod == g
        for i in range(1, n + 1):
            w = dec.words[n - i]
            assert all(x <= i for x in w)
            if w:
                # every reduced word of w_i ends in s_i
                assert sys_.right_descents(dec.factor(i)) == {i}
        seen.add(dec.factors)
    assert len(seen) == sys_.order()


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_heads_and_tails(name):
    """A prefix or suffix of a normal form is itself a normal form."""
    sys_ = system(name)
    for g in sys_.elements():
        nf = nf_rlex(sys_, g)
        for k in range(len(nf) + 1):
            assert nf_rlex(sys_, sys_.element(nf[:k])) == nf[:k]
            assert nf_rlex(sys_, sys_.element(nf[k:])) == nf[k:]


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_top_factor_decides_first(name):
    """u < v iff w_n(u) < w_n(v), or they agree and the remaining factors compare u < v."""
    sys_ = system(name)
    dec = {g: coset_decompose(sys_, g).words for g in sys_.elements()}
    for u in sys_.elements():
        for v in sys_.elements():
            hu, hv = dec[u][0], dec[v][0]
            tu, tv = sum(dec[u][1:], ()), sum(dec[v][1:], ())
            expected = (compare_deletion(hu, hv) == Order.LESS
                        or (hu == hv and compare_deletion(tu, tv) == Order.LESS))
            assert (compare_elements(sys_, u, v) == Order.LESS) == expected
