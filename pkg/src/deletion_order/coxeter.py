"""Coxeter systems and element arithmetic.

A :class:`CoxeterSystem` pairs a Coxeter matrix with a group model.  Group
elements are plain hashable values owned by the model (a window tuple for the
permutation models, ``(length, last letter)`` for dihedral groups, a canonical
reduced word for :class:`TitsModel`).  Generators are numbered ``1..n`` and
their order ``s_1 < ... < s_n`` is the index order.
"""

from __future__ import annotations

import itertools
import json
import math
import re
from abc import ABC, abstractmethod
from collections import deque
from pathlib import Path
from typing import Hashable, Iterable, Sequence

from .errors import InfiniteGroupError, InputError, ResourceCapExceeded
from .words import Word, make_word

INFINITY = 0  # matrix entry encoding m = infinity, as in the JSON file format

DEFAULT_ELEMENT_CAP = 200_000
DEFAULT_WORD_CAP = 20
DEFAULT_REDUCED_WORDS_CAP = 16
# braid-class search is only practical for small groups
TITS_ENUMERATION_LIMIT = 1000

Element = Hashable


class CoxeterMatrix:
    """Symmetric Coxeter matrix with ``1`` on the diagonal and entries ``>= 2``
    (or :data:`INFINITY`) off it."""

    def __init__(self, m: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in m)
        n = len(rows)
        if n == 0:
            raise InputError("Coxeter matrix must have rank at least 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InputError("Coxeter matrix must be square")
            if row[i] != 1:
                raise InputError(f"diagonal entry m[{i + 1}][{i + 1}] must be 1")
            for j, x in enumerate(row):
                if i == j:
                    continue
                if x != rows[j][i]:
                    raise InputError(f"Coxeter matrix is not symmetric at ({i + 1}, {j + 1})")
                if x != INFINITY and x < 2:
                    raise InputError(f"off-diagonal entry m[{i + 1}][{j + 1}] = {x} must be >= 2 or 0 (infinity)")
        self.rows = rows

    @property
    def rank(self) -> int:
        return len(self.rows)

    def m(self, s: int, t: int) -> int:
        """Entry for generators ``s, t`` (1-based); 0 means infinity."""
        return self.rows[s - 1][t - 1]

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.rows]})"

    def submatrix(self, gens: Sequence[int]) -> "CoxeterMatrix":
        return CoxeterMatrix([[self.m(s, t) for t in gens] for s in gens])

    def permuted(self, order: Sequence[int]) -> "CoxeterMatrix":
        """Relabel so that new ``s_i`` is old ``s_{order[i-1]}``."""
        if sorted(order) != list(range(1, self.rank + 1)):
            raise InputError(f"generator order {list(order)} is not a permutation of 1..{self.rank}")
        return self.submatrix(order)

    def to_json(self) -> str:
        return json.dumps({"rank": self.rank, "m": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> "CoxeterMatrix":
        try:
            data = json.loads(text)
            rank, rows = data["rank"], data["m"]
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"bad Coxeter matrix JSON: {exc}") from exc
        mat = cls(rows)
        if mat.rank != rank:
            raise InputError(f"rank {rank} does not match a {mat.rank}x{mat.rank} matrix")
        return mat


# -- standard diagrams ------------------------------------------------------

def _from_edges(n: int, edges: Iterable[tuple[int, int, int]]) -> CoxeterMatrix:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for s, t, m in edges:
        rows[s - 1][t - 1] = rows[t - 1][s - 1] = m
    return CoxeterMatrix(rows)


def type_a(n: int) -> CoxeterMatrix:
    return _from_edges(n, ((i, i + 1, 3) for i in range(1, n)))


def type_b(n: int) -> CoxeterMatrix:
    """The double (m = 4) edge joins ``s_1`` and ``s_2``."""
    if n < 2:
        raise InputError("type B needs rank >= 2")
    return _from_edges(n, [(1, 2, 4)] + [(i, i + 1, 3) for i in range(2, n)])


def type_d(n: int) -> CoxeterMatrix:
    """``s_1`` and ``s_3`` are the fork ends attached to ``s_2``; the tail is
    ``s_2 - s_4 - ... - s_n``."""
    if n < 4:
        raise InputError("type D needs rank >= 4")
    edges = [(1, 2, 3), (2, 3, 3), (2, 4, 3)] + [(i, i + 1, 3) for i in range(4, n)]
    return _from_edges(n, edges)


def type_e(n: int) -> CoxeterMatrix:
    if n not in (6, 7, 8):
        raise InputError("type E needs rank 6, 7 or 8")
    edges = [(1, 3, 3), (2, 4, 3)] + [(i, i + 1, 3) for i in range(3, n)]
    return _from_edges(n, edges)


def type_f4() -> CoxeterMatrix:
    return _from_edges(4, [(1, 2, 3), (2, 3, 4), (3, 4, 3)])


def type_h(n: int) -> CoxeterMatrix:
    if n not in (3, 4):
        raise InputError("type H needs rank 3 or 4")
    return _from_edges(n, [(1, 2, 5)] + [(i, i + 1, 3) for i in range(2, n)])


def dihedral(m: int) -> CoxeterMatrix:
    """``I2(m)``; ``m = 0`` is the infinite dihedral group."""
    return CoxeterMatrix([[1, m], [m, 1]])


def affine_a(n: int) -> CoxeterMatrix:
    """Affine ``A~_n``: a cycle of ``n + 1`` generators (``A~_1`` is ``I2(inf)``)."""
    if n == 1:
        return dihedral(INFINITY)
    return _from_edges(n + 1, [(i, i % (n + 1) + 1, 3) for i in range(1, n + 2)])


def universal(n: int) -> CoxeterMatrix:
    """Rank-``n`` universal Coxeter group: every ``m_ij`` infinite."""
    return _from_edges(n, ((s, t, INFINITY) for s, t in itertools.combinations(range(1, n + 1), 2)))


PRESET_NAMES = (
    [f"A{n}" for n in range(1, 6)] + [f"B{n}" for n in range(2, 5)] + ["D4", "D5"]
    + [f"I2({m})" for m in range(3, 13)] + ["Atilde2", "U3", "I2inf"]
)


def preset(name: str) -> CoxeterMatrix:
    """Matrix for a named system: ``An``, ``Bn``, ``Dn``, ``En``, ``F4``,
    ``Hn``, ``I2(m)``, ``I2inf``, ``Atilden`` and ``Un``."""
    key = name.strip().replace(" ", "")
    if key in ("I2inf", "I2(inf)", "I2(0)"):
        return dihedral(INFINITY)
    if key == "F4":
        return type_f4()
    m = re.fullmatch(r"I2\((\d+)\)", key)
    if m:
        order = int(m.group(1))
        if order < 2:
            raise InputError(f"I2(m) needs m >= 2, got {order}")
        return dihedral(order)
    m = re.fullmatch(r"(A|B|D|E|H|Atilde|U)(\d+)", key)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise InputError(f"rank must be positive in {name!r}")
        builders = {"A": type_a, "B": type_b, "D": type_d, "E": type_e,
                    "H": type_h, "Atilde": affine_a, "U": universal}
        return builders[kind](n)
    raise InputError(f"unknown preset {name!r}")


# -- finite type recognition ------------------------------------------------

_FINITE_ORDERS = {
    "E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400,
}


def finite_order(type_name: str) -> int:
    """Order of an irreducible finite Coxeter group given its type name."""
    m = re.fullmatch(r"I2\((\d+)\)", type_name)
    if m:
        return 2 * int(m.group(1))
    if type_name in _FINITE_ORDERS:
        return _FINITE_ORDERS[type_name]
    kind, n = type_name[0], int(type_name[1:])
    if kind == "A":
        return math.factorial(n + 1)
    if kind == "B":
        return 2 ** n * math.factorial(n)
    if kind == "D":
        return 2 ** (n - 1) * math.factorial(n)
    raise InputError(f"unknown finite type {type_name!r}")


def components(matrix: CoxeterMatrix, gens: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Connected components of the Coxeter diagram restricted to ``gens``."""
    nodes = sorted(set(range(1, matrix.rank + 1) if gens is None else gens))
    seen: set[int] = set()
    out = []
    for start in nodes:
        if start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            s = stack.pop()
            comp.append(s)
            for t in nodes:
                if t not in seen and matrix.m(s, t) != 2:
                    seen.add(t)
                    stack.append(t)
        out.append(tuple(sorted(comp)))
    return out


def _walk(adj: dict[int, list[int]], start: int, avoid: int | None = None) -> list[int]:
    path = [start]
    prev, cur = avoid, start
    while True:
        nxt = [t for t in adj[cur] if t != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def classify_component(matrix: CoxeterMatrix, nodes: Sequence[int]) -> tuple[str, tuple[int, ...]] | None:
    """Finite type of a connected diagram, or ``None`` if the group is infinite.

    Returns ``(type name, node sequence)``.  The node sequence lists the
    generators in the standard labelling of that type: the path from the
    smaller end for ``A``; starting at the m = 4 end for ``B`` (and m = 5 end
    for ``H``); for ``D_k`` the two fork ends, the branch node, then the tail.
    """
    nodes = sorted(nodes)
    k = len(nodes)
    if k == 1:
        return "A1", tuple(nodes)
    adj = {s: [t for t in nodes if t != s and matrix.m(s, t) != 2] for s in nodes}
    labels = {}
    for s, t in itertools.combinations(nodes, 2):
        m = matrix.m(s, t)
        if m == INFINITY:
            return None
        if m != 2:
            labels[frozenset((s, t))] = m
    if len(labels) != k - 1:
        return None  # connected with a cycle
    if k == 2:
        m = labels[frozenset(nodes)]
        name = {3: "A2", 4: "B2"}.get(m, f"I2({m})")
        return name, tuple(nodes)
    degrees = {s: len(adj[s]) for s in nodes}
    branch = [s for s in nodes if degrees[s] >= 3]
    if not branch:
        ends = [s for s in nodes if degrees[s] == 1]
        seq = _walk(adj, ends[0])
        labs = [labels[frozenset(p)] for p in zip(seq, seq[1:])]
        if all(x == 3 for x in labs):
            return f"A{k}", tuple(seq)
        odd = [i for i, x in enumerate(labs) if x != 3]
        if len(odd) != 1:
            return None
        special = labs[odd[0]]
        if odd[0] == k - 2:
            seq, labs = seq[::-1], labs[::-1]
        if special == 4 and labs[0] == 4:
            return f"B{k}", tuple(seq)
        if special == 4 and k == 4 and labs == [3, 4, 3]:
            return "F4", tuple(seq)
        if special == 5 and labs[0] == 5 and k in (3, 4):
            return f"H{k}", tuple(seq)
        return None
    if len(branch) > 1 or degrees[branch[0]] > 3 or any(x != 3 for x in labels.values()):
        return None
    center = branch[0]
    arms = sorted((_walk(adj, t, center) for t in adj[center]), key=lambda a: (len(a), a[0]))
    p, q, r = (len(a) for a in arms)
    if p != 1:
        return None
    if q == 1:
        fork = sorted((arms[0][0], arms[1][0]))
        return f"D{k}", (fork[0], fork[1], center, *arms[2])
    if q == 2 and r in (2, 3, 4):
        return f"E{k}", (center, *arms[0], *arms[1], *arms[2])
    return None


def classify(matrix: CoxeterMatrix, gens: Iterable[int] | None = None) -> list[str | None]:
    """Type name (or ``None`` for infinite) of each diagram component."""
    out = []
    for comp in components(matrix, gens):
        found = classify_component(matrix, comp)
        out.append(found[0] if found else None)
    return out


def is_finite(system_or_matrix, gens: Iterable[int] | None = None) -> bool:
    """Finiteness of ``W`` (or of the standard parabolic on ``gens``)."""
    matrix = getattr(system_or_matrix, "matrix", system_or_matrix)
    return all(t is not None for t in classify(matrix, gens))


# -- group models -------------------------------------------------------------

class GroupModel(ABC):
    """Right action of the generators on a set of hashable element handles.

    ``relabel[s - 1]`` is the model's own index for system generator ``s``.
    """

    name = "model"

    def __init__(self, rank: int, relabel: Sequence[int] | None = None):
        self.rank = rank
        self.relabel = tuple(relabel) if relabel is not None else tuple(range(1, rank + 1))

    @abstractmethod
    def identity(self) -> Element: ...

    @abstractmethod
    def _act(self, g: Element, s: int) -> Element: ...

    @abstractmethod
    def length(self, g: Element) -> int: ...

    def mul(self, g: Element, s: int) -> Element:
        return self._act(g, self.relabel[s - 1])

    def image(self, g: Element) -> tuple[int, ...] | None:
        """One-line image ``((1)g, ..., (N)g)`` for permutation models."""
        return None


def _inversions(p: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


class PermutationModel(GroupModel):
    """Type ``A_n`` acting on ``1..n+1``; ``s_i`` is the transposition
    ``(i, i+1)`` and ``(x)(g s) = ((x)g)s``."""

    name = "permutation"

    def identity(self):
        return tuple(range(1, self.rank + 2))

    def _act(self, g, s):
        return tuple(s + 1 if x == s else s if x == s + 1 else x for x in g)

    def length(self, g):
        return _inversions(g)

    def image(self, g):
        return g


class SignedPermutationModel(GroupModel):
    """Type ``B_n`` on ``+-1..+-n``: ``s_1`` negates ``1``, ``s_i`` swaps
    ``i-1`` and ``i`` for ``i >= 2``."""

    name = "signed-permutation"

    def identity(self):
        return tuple(range(1, self.rank + 1))

    def _act(self, g, s):
        if s == 1:
            return tuple(-x if abs(x) == 1 else x for x in g)
        a, b = s - 1, s

        def f(x):
            y = abs(x)
            y = b if y == a else a if y == b else y
            return y if x > 0 else -y
        return tuple(f(x) for x in g)

    @staticmethod
    def _nsp(g):
        return sum(1 for i, j in itertools.combinations(range(len(g)), 2) if g[i] + g[j] < 0)

    def length(self, g):
        return _inversions(g) + sum(1 for x in g if x < 0) + self._nsp(g)

    def image(self, g):
        return g


class EvenSignedModel(SignedPermutationModel):
    """Type ``D_n`` on ``+-1..+-n`` with an even number of sign changes.

    Model generator 1 sends ``1 -> -2, 2 -> -1``; generator ``i >= 2`` swaps
    ``i-1`` and ``i``.  Generators 1 and 2 are the fork ends, 3 the branch node.
    """

    name = "even-signed-permutation"

    def _act(self, g, s):
        if s == 1:
            swap = {1: -2, -1: 2, 2: -1, -2: 1}
            return tuple(swap.get(x, x) for x in g)
        return super()._act(g, s)

    def length(self, g):
        return _inversions(g) + self._nsp(g)


class DihedralModel(GroupModel):
    """``I2(m)`` (``m = 0``: infinite).  An element is ``(length, last letter)``
    of its alternating reduced word; the identity is ``(0, 0)`` and the
    longest element of a finite group is ``(m, 0)``."""

    name = "dihedral"

    def __init__(self, m: int, relabel=None):
        super().__init__(2, relabel)
        self.m = m

    def identity(self):
        return (0, 0)

    def _act(self, g, s):
        length, last = g
        other = 3 - s
        if length == 0:
            return (1, s)
        if self.m and length == self.m:
            return (length - 1, other)
        if last == s:
            return (length - 1, other) if length > 1 else (0, 0)
        if self.m and length + 1 == self.m:
            return (self.m, 0)
        return (length + 1, s)

    def length(self, g):
        return g[0]


def _alternating(s: int, t: int, m: int) -> Word:
    return tuple(s if i % 2 == 0 else t for i in range(m))


class TitsModel(GroupModel):
    """Any Coxeter matrix.  An element is the right-to-left lexicographically
    least reduced word of its class; the class (all reduced words, by
    Matsumoto's theorem) is found by breadth-first search over braid moves.

    ``word_cap`` bounds the length of any element produced.
    """

    name = "tits"

    def __init__(self, matrix: CoxeterMatrix, word_cap: int = DEFAULT_WORD_CAP):
        super().__init__(matrix.rank)
        self.matrix = matrix
        self.word_cap = word_cap
        self._classes: dict[Word, frozenset[Word]] = {(): frozenset({()})}
        self._products: dict[tuple[Word, int], Word] = {}

    def identity(self):
        return ()

    def _braid_neighbours(self, w: Word):
        for i in range(len(w) - 1):
            s, t = w[i], w[i + 1]
            if s == t:
                continue
            m = self.matrix.m(s, t)
            if m == INFINITY or i + m > len(w):
                continue
            if w[i:i + m] == _alternating(s, t, m):
                yield w[:i] + _alternating(t, s, m) + w[i + m:]

    def braid_class(self, w: Word) -> frozenset[Word]:
        """All words reachable from the reduced word ``w`` by braid moves."""
        seen = {w}
        queue = deque([w])
        while queue:
            x = queue.popleft()
            for y in self._braid_neighbours(x):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def _canonical(self, w: Word) -> Word:
        if len(w) > self.word_cap:
            raise ResourceCapExceeded(f"word length {len(w)} exceeds the cap of {self.word_cap}")
        cls = self.braid_class(w)
        canon = min(cls, key=lambda x: x[::-1])
        self._classes.setdefault(canon, cls)
        return canon

    def _act(self, g, s):
        key = (g, s)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        cls = self._classes.get(g)
        if cls is None:
            cls = self._classes[self._canonical(g)]
        for x in cls:
            if x and x[-1] == s:
                out = self._canonical(x[:-1])
                break
        else:
            out = self._canonical(g + (s,))
        self._products[key] = out
        return out

    def length(self, g):
        return len(g)


# -- systems ------------------------------------------------------------------

class CoxeterSystem:
    """A Coxeter matrix with the total order ``s_1 < ... < s_n`` and a model.

    ``generator_order`` records which generators of the source matrix became
    ``s_1, ..., s_n`` when an order override was applied.
    """

    def __init__(self, matrix: CoxeterMatrix, model: GroupModel, name: str | None = None,
                 generator_order: Sequence[int] | None = None,
                 element_cap: int = DEFAULT_ELEMENT_CAP):
        self.matrix = matrix
        self.model = model
        self.name = name or "W"
        self.generator_order = tuple(generator_order or range(1, matrix.rank + 1))
        self.element_cap = element_cap
        self.types = classify(matrix)
        self._elements: list[Element] | None = None

    def __repr__(self):
        return f"CoxeterSystem({self.name}, rank={self.rank}, model={self.model.name})"

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    @property
    def identity(self) -> Element:
        return self.model.identity()

    def _check_gen(self, s: int) -> None:
        if not isinstance(s, int) or not 1 <= s <= self.rank:
            raise InputError(f"generator {s!r} is not in 1..{self.rank}")

    def mul(self, g: Element, s: int) -> Element:
        """``g * s_s``."""
        self._check_gen(s)
        return self.model.mul(g, s)

    def element(self, word: Iterable[int]) -> Element:
        g = self.identity
        for s in make_word(word, self.rank):
            g = self.model.mul(g, s)
        return g

    def length(self, g: Element) -> int:
        return self.model.length(g)

    def right_descents(self, g: Element) -> frozenset[int]:
        lg = self.length(g)
        return frozenset(s for s in self.generators if self.length(self.model.mul(g, s)) < lg)

    def multiply(self, g: Element, h: Element) -> Element:
        from .normal_forms import nf_rlex
        for s in nf_rlex(self, h):
            g = self.model.mul(g, s)
        return g

    def inverse(self, g: Element) -> Element:
        from .normal_forms import nf_rlex
        return self.element(reversed(nf_rlex(self, g)))

    def image(self, g: Element) -> tuple[int, ...] | None:
        return self.model.image(g)

    def is_finite(self, gens: Iterable[int] | None = None) -> bool:
        return is_finite(self.matrix, gens)

    def order(self) -> int:
        return len(self.elements())

    def elements(self) -> list[Element]:
        """All elements, breadth first from the identity (generators in order)."""
        if self._elements is None:
            if not self.is_finite():
                raise InfiniteGroupError(f"{self.name} is infinite; cannot enumerate it")
            if isinstance(self.model, TitsModel):
                size = math.prod(finite_order(t) for t in classify(self.matrix))
                if size > TITS_ENUMERATION_LIMIT:
                    raise ResourceCapExceeded(
                        f"{self.name} has {size} elements; the braid-move model stops at "
                        f"{TITS_ENUMERATION_LIMIT}")
            seen = {self.identity: None}
            queue = deque([self.identity])
            while queue:
                g = queue.popleft()
                for s in self.generators:
                    h = self.model.mul(g, s)
                    if h not in seen:
                        if len(seen) >= self.element_cap:
                            raise ResourceCapExceeded(
                                f"enumeration of {self.name} exceeded {self.element_cap} elements")
                        seen[h] = None
                        queue.append(h)
            self._elements = list(seen)
        return self._elements

    def parabolic(self, gens: Iterable[int]) -> "CoxeterSystem":
        """Standard parabolic subsystem on ``gens``, relabelled ``1..k`` in
        increasing order."""
        gens = sorted(set(gens))
        for s in gens:
            self._check_gen(s)
        if not gens:
            raise InputError("a parabolic subsystem needs at least one generator")
        return build_system(self.matrix.submatrix(gens), name=f"{self.name}{list(gens)}",
                            element_cap=self.element_cap)


def _model_for(matrix: CoxeterMatrix, word_cap: int) -> GroupModel:
    comps = components(matrix)
    if len(comps) == 1:
        found = classify_component(matrix, comps[0])
        if found is not None:
            name, seq = found
            n = matrix.rank
            relabel = [0] * n
            for model_gen, s in enumerate(seq, start=1):
                relabel[s - 1] = model_gen
            if n == 2:
                m = matrix.m(1, 2)
                if m == 3:
                    return PermutationModel(2, relabel)
                if m == 4:
                    return SignedPermutationModel(2, relabel)
                return DihedralModel(m, relabel)
            if name.startswith("A"):
                return PermutationModel(n, relabel)
            if name.startswith("B"):
                return SignedPermutationModel(n, relabel)
            if name.startswith("D"):
                return EvenSignedModel(n, relabel)
        elif matrix.rank == 2:
            return DihedralModel(INFINITY)
    return TitsModel(matrix, word_cap)


def check_relations(system: CoxeterSystem) -> None:
    """Assert ``s^2 = 1`` and that ``s t`` has order exactly ``m_st``."""
    from .errors import InvariantViolation
    e = system.identity
    for s in system.generators:
        if system.mul(system.mul(e, s), s) != e or system.mul(e, s) == e:
            raise InvariantViolation(f"generator s{s} is not an involution in {system.model.name}")
    for s, t in itertools.combinations(system.generators, 2):
        m = system.matrix.m(s, t)
        limit = m if m != INFINITY else 3
        g = e
        for k in range(1, limit + 1):
            g = system.mul(system.mul(g, s), t)
            if (g == e) != (k == m):
                raise InvariantViolation(f"(s{s} s{t}) does not have order {m or 'inf'} in {system.model.name}")


def build_system(matrix: CoxeterMatrix | str, order: Sequence[int] | None = None,
                 name: str | None = None, element_cap: int = DEFAULT_ELEMENT_CAP,
                 word_cap: int = DEFAULT_WORD_CAP) -> CoxeterSystem:
    """Build a system from a matrix or preset name, attaching the best model.

    ``order`` lists source generators from least to greatest; it relabels the
    matrix so that the new ``s_i`` is the old ``s_{order[i-1]}``.
    """
    if isinstance(matrix, str):
        name = name or matrix
        matrix = preset(matrix)
    if order is not None:
        matrix = matrix.permuted(order)
    system = CoxeterSystem(matrix, _model_for(matrix, word_cap), name=name,
                           generator_order=order, element_cap=element_cap)
    if system.rank <= 6:
        check_relations(system)
    return system


def load_system(source: str, order: Sequence[int] | None = None, **kwargs) -> CoxeterSystem:
    """Preset name or path to a JSON matrix file."""
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
        return build_system(CoxeterMatrix.from_json(text), order, name=path.stem, **kwargs)
    return build_system(source, order, **kwargs)


def reduced_words(system: CoxeterSystem, g: Element, cap: int = DEFAULT_REDUCED_WORDS_CAP) -> set[Word]:
    """All reduced words of ``g``, via ``R(g) = U_{s in D_R(g)} R(g s) s``."""
    if system.length(g) > cap:
        raise ResourceCapExceeded(f"length {system.length(g)} exceeds the reduced-word cap {cap}")
    memo: dict[Element, set[Word]] = {}

    def rec(x):
        if x in memo:
            return memo[x]
        if system.length(x) == 0:
            out = {()}
        else:
            out = {w + (s,) for s in system.right_descents(x) for w in rec(system.model.mul(x, s))}
        memo[x] = out
        return out

    return set(rec(g))
