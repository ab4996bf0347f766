from __future__ import annotations

import pytest

from deletion_order.cayley import label_by_sorting
from deletion_order.duality import (
    coset_representative, duality_report, labeling_for, longest_element, minimal_coset_reps,
)
from deletion_order.errors import InfiniteGroupError
from deletion_order.normal_forms import nf_rlex

from support import system


@pytest.mark.parametrize("name", ["A2", "A3", "A4", "B2", "B3", "I2(5)", "I2(8)", "D4"])
def test_duality_holds(name):
    rep = duality_report(system(name))
    assert rep.holds and rep.defects == []


def test_d5_fails():
    rep = duality_report(system("D5"))
    assert not rep.holds
    assert rep.parabolic_order == 192
    by_word = {d.word: d for d in rep.defects}
    d = by_word[(1, 2, 4, 5)]
    assert (d.label, d.dual_label, d.total) == (4 * 192 + 1, 5 * 192, 1729)


def test_graph_and_sort_labelings_agree():
    a3 = system("A3")
    assert labeling_for(a3, "graph").order == labeling_for(a3, "sort").order
    with pytest.raises(ValueError):
        labeling_for(a3, "magic")


def test_longest_element():
    for name, length in (("A3", 6), ("B3", 9), ("D4", 12), ("I2(7)", 7)):
        sys_ = system(name)
        w0 = longest_element(sys_)
        assert sys_.length(w0) == length
        assert sys_.multiply(w0, w0) == sys_.identity
    with pytest.raises(InfiniteGroupError):
        longest_element(system("Atilde2"))


@pytest.mark.parametrize("name", ["A3", "B3", "A4"])
def test_w0_reverses_length(name):
    sys_ = system(name)
    w0 = longest_element(sys_)
    top = sys_.length(w0)
    for w in sys_.elements():
        assert sys_.length(sys_.multiply(w0, w)) == top - sys_.length(w)


def coset_data(sys_):
    x_gens = range(1, sys_.rank)
    reps = minimal_coset_reps(sys_)
    x_size = sys_.parabolic(x_gens).order()
    lab = label_by_sorting(sys_)
    return reps, x_size, lab, x_gens


@pytest.mark.parametrize("name", ["A3", "B3"])
def test_coset_labels(name):
    sys_ = system(name)
    reps, x_size, lab, x_gens = coset_data(sys_)
    assert len(reps) * x_size == sys_.order()
    for c in reps:
        assert lab.L(c) == sys_.length(c) * x_size + 1
    for w in sys_.elements():
        c = coset_representative(sys_, w, x_gens)
        x = sys_.multiply(sys_.inverse(c), w)
        assert all(s in x_gens for s in nf_rlex(sys_, x))
        assert lab.L(w) + 1 == lab.L(c) + lab.L(x)
        assert lab.L(w) == sys_.length(c) * x_size + lab.L(x)


def test_a3_rep_labels():
    a3 = system("A3")
    rep = duality_report(a3)
    assert [k for _, _, k in rep.coset_rep_labels] == [1, 7, 13, 19]
    assert [c for c, _, _ in rep.coset_rep_labels] == [(), (3,), (2, 3), (1, 2, 3)]


@pytest.mark.parametrize("name, total", [("A3", 3), ("A4", 4), ("B3", 5)])
def test_w0_swaps_cosets(name, total):
    sys_ = system(name)
    reps, _, _, x_gens = coset_data(sys_)
    w0 = longest_element(sys_)
    for c1 in reps:
        c2 = coset_representative(sys_, sys_.multiply(w0, c1), x_gens)
        assert sys_.length(c1) + sys_.length(c2) == total


def test_d5_reps_are_the_expected_elements():
    d5 = system("D5")
    reps = minimal_coset_reps(d5)
    assert len(reps) == 10
    expected = [(), (5,), (4, 5), (2, 4, 5), (1, 2, 4, 5), (3, 2, 4, 5),
                (1, 3, 2, 4, 5), (2, 1, 3, 2, 4, 5), (4, 2, 1, 3, 2, 4, 5),
                (5, 4, 2, 1, 3, 2, 4, 5)]
    assert set(reps) == {d5.element(w) for w in expected}


def test_report_formats():
    rep = duality_report(system("D5"))
    text = rep.format(defects_only=True)
    assert "s1s2s4s5 769 960 1729" in text
    assert len(text.splitlines()) == len(rep.defects)
    full = rep.to_dict()
    assert full["holds"] is False and len(full["coset_reps"]) == 10
    assert "coset_reps" not in rep.to_dict(defects_only=True)
