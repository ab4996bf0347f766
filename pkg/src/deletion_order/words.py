"""Words over an ordered alphabet and the deletion order on them.

Letters are the integers ``1..n`` and letter ``i`` stands for ``a_i``; the
alphabet order is the integer order.  A word is a plain tuple of letters and
``()`` is the empty word ``e``.  Reversal of a tuple plays the part of the
formal inverse ``w^-1``.

>>> compare_deletion(parse_word("a1a2a3a2a1"), parse_word("a1a2a3a1a2a2"))
<Order.LESS: -1>
>>> deletion_sequence(parse_word("a1a2a3a1a2a2"), 2).blocks
((1,), (3, 1), (), ())
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

Word = tuple[int, ...]

__all__ = [
    "Word", "Order", "DeletionSequence", "AlphaVector",
    "make_word", "parse_word", "format_word",
    "deletion_sequence", "interleave", "lambda_count",
    "compare_deletion", "compare_deletion_reference", "deletion_key",
    "delta", "delta_bar", "tau", "alpha",
    "is_subword", "compare_lex",
]


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Order":
        return cls((a > b) - (a < b))

    def flip(self) -> "Order":
        return Order(-self.value)


def _check_letter(j: int, n: int | None = None) -> None:
    if not isinstance(j, int) or j < 1 or (n is not None and j > n):
        bound = f"1..{n}" if n is not None else "a positive integer"
        raise InputError(f"letter {j!r} is not in {bound}")


def make_word(letters: Iterable[int], n: int | None = None) -> Word:
    """Validate ``letters`` and return them as a word tuple."""
    w = tuple(letters)
    for j in w:
        _check_letter(j, n)
    return w


_TOKEN = re.compile(r"[as]?(\d+)")
_COMPACT = re.compile(r"(?:[as](\d+))+")


def parse_word(text: str, n: int | None = None) -> Word:
    """Parse the textual word syntax.

    Accepted forms: ``"e"`` (empty word), whitespace separated tokens such as
    ``"a3 a1 a2"``, ``"s3 s1"`` or ``"3 1 2"``, concatenated prefixed letters
    such as ``"a1a2a3"``, and bare digit strings ``"312"`` (one letter per
    digit, so only for alphabets of size at most 9).
    """
    s = text.strip()
    if s in ("e", ""):
        return ()
    tokens = s.replace(",", " ").split()
    if len(tokens) > 1:
        letters = []
        for tok in tokens:
            m = _TOKEN.fullmatch(tok)
            if m is None:
                raise InputError(f"cannot parse letter {tok!r} in {text!r}")
            letters.append(int(m.group(1)))
        return make_word(letters, n)
    if _COMPACT.fullmatch(s):
        return make_word((int(d) for d in re.findall(r"\d+", s)), n)
    if s.isdigit():
        return make_word((int(c) for c in s), n)
    raise InputError(f"cannot parse word {text!r}")


def format_word(w: Sequence[int], prefix: str = "a", sep: str = "") -> str:
    """Inverse of :func:`parse_word`; ``()`` prints as ``"e"``.

    >>> format_word((1, 2, 1), prefix="s")
    's1s2s1'
    >>> format_word((3, 1, 2), sep=" ")
    'a3 a1 a2'
    """
    if not w:
        return "e"
    return sep.join(f"{prefix}{j}" for j in w)


@dataclass(frozen=True)
class DeletionSequence:
    """The blocks ``[b_0, ..., b_l]`` of a word cut at every ``pivot`` letter."""

    pivot: int
    blocks: tuple[Word, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def __getitem__(self, i: int) -> Word:
        return self.blocks[i]


def deletion_sequence(w: Sequence[int], j: int) -> DeletionSequence:
    _check_letter(j)
    blocks = []
    start = 0
    for pos, letter in enumerate(w):
        if letter == j:
            blocks.append(tuple(w[start:pos]))
            start = pos + 1
    blocks.append(tuple(w[start:]))
    return DeletionSequence(j, tuple(blocks))


def interleave(seq: DeletionSequence) -> Word:
    """Rebuild the word ``b_0 a_j b_1 ... a_j b_l``."""
    out: list[int] = list(seq.blocks[0])
    for block in seq.blocks[1:]:
        out.append(seq.pivot)
        out.extend(block)
    return tuple(out)


def lambda_count(w: Sequence[int], j: int) -> int:
    """Number of blocks of the ``a_j`` deletion sequence, i.e. occurrences + 1."""
    _check_letter(j)
    return sum(1 for letter in w if letter == j) + 1


def _compare(u: Word, v: Word) -> Order:
    # Letters above the largest one present split nothing (a single block),
    # so each level can jump straight to the top letter actually occurring.
    while u != v:
        top = max(max(u, default=0), max(v, default=0))
        if top <= 1:
            return Order.of(len(u), len(v))
        cu = u.count(top)
        cv = v.count(top)
        if cu != cv:
            return Order.of(cu, cv)
        iu = iv = 0
        while True:
            ju = u.index(top, iu) if cu else len(u)
            jv = v.index(top, iv) if cv else len(v)
            if u[iu:ju] != v[iv:jv]:
                u, v = u[iu:ju], v[iv:jv]
                break
            cu -= 1
            cv -= 1
            iu, iv = ju + 1, jv + 1
    return Order.EQUAL


def compare_deletion(u: Sequence[int], v: Sequence[int], n: int | None = None) -> Order:
    """Compare two words in the deletion order.

    ``n`` is the alphabet size; when given, letters are checked against it.
    The order itself does not depend on ``n`` beyond the letters present.
    """
    u, v = tuple(u), tuple(v)
    if n is not None:
        make_word(u, n)
        make_word(v, n)
    return _compare(u, v)


def compare_deletion_reference(u: Sequence[int], v: Sequence[int], n: int) -> Order:
    """Literal recursion through ``<^n, <^(n-1), ..., <^1``.

    Materialises every deletion sequence.  Slow; kept as the test oracle for
    :func:`compare_deletion`.
    """
    u, v = make_word(u, n), make_word(v, n)
    if u == v:
        return Order.EQUAL
    if n == 1:
        return Order.of(len(u), len(v))
    bu = deletion_sequence(u, n).blocks
    bv = deletion_sequence(v, n).blocks
    if len(bu) != len(bv):
        return Order.of(len(bu), len(bv))
    for b, c in zip(bu, bv):
        if b != c:
            return compare_deletion_reference(b, c, n - 1)
    return Order.EQUAL


def deletion_key(w: Sequence[int], n: int):
    """A nested-tuple sort key whose natural order is the deletion order on
    words over ``1..n``."""
    w = tuple(w)
    if n <= 1:
        return len(w)
    blocks = deletion_sequence(w, n).blocks
    return (len(blocks), tuple(deletion_key(b, n - 1) for b in blocks))


def tau(w: Sequence[int], n: int) -> Word:
    """Suffix of ``w`` after its last ``a_n`` (all of ``w`` if none)."""
    w = tuple(w)
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] == n:
            return w[pos + 1:]
    return w


def delta_bar(w: Sequence[int], k: int) -> Word:
    """Prefix of ``w`` up to and including its last ``a_k`` (``e`` if none)."""
    w = tuple(w)
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] == k:
            return w[:pos + 1]
    return ()


def delta(w: Sequence[int], k: int, n: int | None = None) -> Word:
    """The ``k``-th segment when ``w`` is peeled from the left.

    ``delta(w, n)`` is the prefix through the last ``a_n``; then, on what is
    left, the prefix through the last ``a_(n-1)``, and so on down to ``k``.
    ``n`` defaults to the largest letter of ``w``.

    >>> [delta((1, 2, 3, 1, 2, 2), k, 3) for k in (3, 2, 1)]
    [(1, 2, 3), (1, 2, 2), ()]
    """
    w = tuple(w)
    if n is None:
        n = max(max(w, default=1), k)
    _check_letter(k, n)
    rest = w
    for top in range(n, k, -1):
        rest = tau(rest, top)
    return delta_bar(rest, k)


@dataclass(frozen=True, order=True)
class AlphaVector:
    """``[lambda_n(delta_n(w^-1)), ..., lambda_1(delta_1(w^-1))]``.

    Stores block counts; ``counts`` gives the matching occurrence counts.
    Ordering is lexicographic on the entries.
    """

    entries: tuple[int, ...]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.entries)


def alpha(w: Sequence[int], n: int | None = None) -> AlphaVector:
    """
    >>> alpha((1, 2, 1, 3, 3, 1, 2), 3).counts
    (2, 1, 1)
    """
    w = tuple(w)
    if n is None:
        n = max(w, default=1)
    r = w[::-1]
    return AlphaVector(tuple(lambda_count(delta(r, k, n), k) for k in range(n, 0, -1)))


def is_subword(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when ``u`` is a (not necessarily contiguous) subsequence of ``v``."""
    it = iter(v)
    return all(letter in it for letter in u)


def compare_lex(u: Sequence[int], v: Sequence[int], direction: str = "ltr") -> Order:
    """Lexicographic comparison, left-to-right (``"ltr"``) or right-to-left
    (``"rtl"``).  A proper prefix (suffix for ``"rtl"``) is smaller.
    """
    u, v = tuple(u), tuple(v)
    if direction == "rtl":
        u, v = u[::-1], v[::-1]
    elif direction != "ltr":
        raise InputError(f"unknown direction {direction!r}")
    return Order.of(u, v)
