"""Normal forms of group elements and the deletion order on ``W``."""

from __future__ import annotations

import functools
import weakref
from dataclasses import dataclass

from .coxeter import DEFAULT_REDUCED_WORDS_CAP, CoxeterSystem, Element, reduced_words
from .errors import InvariantViolation
from .words import Order, Word, compare_deletion, delta, deletion_key

__all__ = [
    "NormalForm", "CosetDecomposition", "nf_rlex", "nf_delta_oracle", "normal_form",
    "compare_elements", "element_key", "sort_elements", "coset_decompose",
]

# Per-system memo of nf_rlex.  Pure cache: entries are recomputable and
# identical whichever thread writes them first.
_nf_cache: "weakref.WeakKeyDictionary[CoxeterSystem, dict]" = weakref.WeakKeyDictionary()


def nf_rlex(system: CoxeterSystem, g: Element) -> Word:
    """Right-to-left lexicographically least reduced word of ``g``.

    Built from the right: repeatedly strip the least right descent.
    """
    cache = _nf_cache.setdefault(system, {})
    hit = cache.get(g)
    if hit is not None:
        return hit
    letters = []
    x = g
    while True:
        descents = system.right_descents(x)
        if not descents:
            break
        s = min(descents)
        letters.append(s)
        x = system.model.mul(x, s)
    word = tuple(reversed(letters))
    cache[g] = word
    return word


def nf_delta_oracle(system: CoxeterSystem, g: Element, cap: int = DEFAULT_REDUCED_WORDS_CAP) -> Word:
    """Deletion-least member of the full set of reduced words of ``g``."""
    words = reduced_words(system, g, cap)
    return min(words, key=functools.cmp_to_key(compare_deletion))


@dataclass(frozen=True)
class NormalForm:
    element: Element
    word: Word
    kind: str  # "delta" or "rlex"


def normal_form(system: CoxeterSystem, g: Element, kind: str = "rlex") -> NormalForm:
    if kind == "rlex":
        return NormalForm(g, nf_rlex(system, g), kind)
    if kind == "delta":
        return NormalForm(g, nf_delta_oracle(system, g), kind)
    raise ValueError(f"unknown normal form kind {kind!r}")


def compare_elements(system: CoxeterSystem, g: Element, h: Element) -> Order:
    """The deletion order on ``W``: compare the normal forms as words."""
    return compare_deletion(nf_rlex(system, g), nf_rlex(system, h))


def element_key(system: CoxeterSystem):
    """Sort key on elements realising the deletion order on ``W``."""
    n = system.rank
    return lambda g: deletion_key(nf_rlex(system, g), n)


def sort_elements(system: CoxeterSystem, elements=None) -> list[Element]:
    if elements is None:
        elements = system.elements()
    return sorted(elements, key=element_key(system))


@dataclass(frozen=True)
class CosetDecomposition:
    """``g = w_n ... w_1`` with ``w_i`` a minimal left coset representative of
    ``W_{s_1..s_(i-1)}`` in ``W_{s_1..s_i}``.  ``factors[0]`` is ``w_n``."""

    factors: tuple[Element, ...]
    words: tuple[Word, ...]

    def factor(self, i: int) -> Element:
        """``w_i`` for ``i`` in ``1..n``."""
        return self.factors[len(self.factors) - i]


def coset_decompose(system: CoxeterSystem, g: Element) -> CosetDecomposition:
    n = system.rank
    nf = nf_rlex(system, g)
    words = tuple(delta(nf, k, n) for k in range(n, 0, -1))
    if sum(words, ()) != nf:
        raise InvariantViolation(f"coset factors of {nf} do not concatenate back to it")
    return CosetDecomposition(tuple(system.element(w) for w in words), words)
