"""Bruhat order through the subword property."""

from __future__ import annotations

from .coxeter import CoxeterSystem, Element
from .normal_forms import nf_rlex


def bruhat_leq(system: CoxeterSystem, u: Element, v: Element) -> bool:
    """``u <=_B v``.

    Walks one reduced word of ``v`` from the right.  Each letter ``s`` is a
    right descent of what is left of ``v``; if it is also a right descent of
    the current ``u`` residue, it is consumed there.  ``u <=_B v`` exactly
    when the residue reaches the identity, i.e. a reduced word of ``u``
    embeds in the fixed word of ``v``.
    """
    word = nf_rlex(system, v)
    lu = system.length(u)
    if lu > len(word):
        return False
    x = u
    for pos in range(len(word) - 1, -1, -1):
        if lu == 0:
            return True
        if lu > pos + 1:
            return False
        xs = system.model.mul(x, word[pos])
        lxs = system.length(xs)
        if lxs < lu:
            x, lu = xs, lxs
    return lu == 0


def bruhat_compare(system: CoxeterSystem, u: Element, v: Element) -> str:
    """One of ``"less"``, ``"greater"``, ``"equal"``, ``"incomparable"``."""
    if u == v:
        return "equal"
    if bruhat_leq(system, u, v):
        return "less"
    if bruhat_leq(system, v, u):
        return "greater"
    return "incomparable"
