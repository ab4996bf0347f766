from __future__ import annotations

import itertools

import pytest

from deletion_order.artinian import (
    artinian_all_orders, is_artinian, l0_decomposition_check, predecessor_bound,
)
from deletion_order.cayley import label_by_sorting, stream_in_deletion_order
from deletion_order.coxeter import build_system
from deletion_order.normal_forms import compare_elements, nf_rlex
from deletion_order.words import Order

from support import system


def test_verdicts():
    assert is_artinian(system("I2inf"))
    assert is_artinian(system("Atilde2"))
    assert is_artinian(system("A3"))
    assert not is_artinian(system("U3"))


def test_all_orders_reports():
    rep = artinian_all_orders(system("Atilde2"))
    assert rep.all_orders and rep.tag == "affine-or-compact-hyperbolic-candidate"
    assert set(rep.verdicts) == {1, 2, 3}
    u3 = artinian_all_orders(system("U3"))
    assert not any(u3.verdicts.values()) and u3.tag == "other"
    assert artinian_all_orders(system("B3")).tag == "finite"
    assert "s2" in str(u3) and u3.to_dict()["verdicts"]["s1"] is False


def test_verdict_depends_only_on_the_greatest_generator():
    # linear diagram 1 -4- 2 -inf- 3: only dropping s1 leaves an infinite parabolic
    m = [[1, 4, 2], [4, 1, 0], [2, 0, 1]]
    from deletion_order.coxeter import CoxeterMatrix
    sys_ = build_system(CoxeterMatrix(m))
    for order in itertools.permutations([1, 2, 3]):
        reordered = build_system(CoxeterMatrix(m), order=list(order))
        assert is_artinian(reordered) == (order[-1] != 1)
    assert artinian_all_orders(sys_).tag == "other"


def test_u3_top_generator_has_infinitely_many_predecessors():
    u3 = system("U3")
    s3 = u3.element((3,))
    for k in range(1, 9):
        g = u3.element((1, 2) * k)
        assert u3.length(g) == 2 * k
        assert compare_elements(u3, g, s3) == Order.LESS


def test_artinian_stream_reaches_top_generator_quickly():
    for name in ("I2inf", "Atilde2"):
        sys_ = system(name)
        bound = sys_.parabolic(range(1, sys_.rank)).order() + 1
        words = [nf_rlex(sys_, g) for g in stream_in_deletion_order(sys_, bound)]
        assert words[-1] == (sys_.rank,)


@pytest.mark.parametrize("name", ["A3", "B3", "D4"])
def test_l0_per_index_reading(name):
    sys_ = system(name)
    lab = label_by_sorting(sys_)
    for g in sys_.elements():
        check = l0_decomposition_check(sys_, g, lab)
        assert check.per_index_holds


def test_l0_literal_reading_fails_somewhere():
    a2 = system("A2")
    g = a2.element((1, 2, 1))
    check = l0_decomposition_check(a2, g)
    assert (check.lhs, check.per_index, check.literal) == (5, 5, 8)
    assert not check.literal_holds


def test_predecessor_bound():
    for name in ("A3", "B3"):
        sys_ = system(name)
        lab = label_by_sorting(sys_)
        for g in sys_.elements():
            assert lab.L(g) - 1 < predecessor_bound(sys_, g)
