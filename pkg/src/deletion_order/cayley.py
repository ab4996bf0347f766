"""Cayley graphs, the greedy successor labelling and its exports."""

from __future__ import annotations

import csv
import heapq
import io
import itertools
import json
import logging
from dataclasses import dataclass, field
from typing import Iterator

from .coxeter import CoxeterSystem, Element
from .errors import InfiniteGroupError, InputError, ResourceCapExceeded
from .normal_forms import element_key, nf_rlex
from .words import format_word

log = logging.getLogger(__name__)

DEFAULT_FRONTIER_CAP = 100_000


@dataclass
class CayleyGraph:
    """Undirected Cayley graph for right multiplication.

    ``vertices`` are in breadth-first order from the identity and
    ``neighbour[i][s - 1]`` is the index of ``vertices[i] * s``.
    """

    rank: int
    vertices: list[Element]
    index: dict[Element, int]
    neighbour: list[tuple[int, ...]]

    def edges(self) -> list[tuple[int, int, int]]:
        """Each ``(i, j, s)`` with ``i < j`` once."""
        return [(i, j, s) for i, row in enumerate(self.neighbour)
                for s, j in enumerate(row, start=1) if i < j]


def build_cayley(system: CoxeterSystem) -> CayleyGraph:
    if not system.is_finite():
        raise InfiniteGroupError(f"{system.name} is infinite; no finite Cayley graph")
    vertices = system.elements()
    index = {g: i for i, g in enumerate(vertices)}
    neighbour = [tuple(index[system.model.mul(g, s)] for s in system.generators) for g in vertices]
    return CayleyGraph(system.rank, vertices, index, neighbour)


@dataclass
class Labeling:
    """Output of the successor algorithm.

    ``order[k - 1]`` is the element labelled ``k``; ``tree_edges`` holds
    ``(x, x*y, y)`` in the order the edges were appended.
    """

    order: list[Element]
    tree_edges: list[tuple[Element, Element, int]]
    label: dict[Element, int] = field(init=False)

    def __post_init__(self):
        self.label = {g: k for k, g in enumerate(self.order, start=1)}

    def __len__(self) -> int:
        return len(self.order)

    def L(self, g: Element) -> int:
        return self.label[g]


def successor_label(graph: CayleyGraph) -> Labeling:
    """Greedy labelling of a finite Cayley graph.

    Start with ``L(id) = 1``.  Each step takes the least generator ``y`` with
    an edge leaving the labelled set, then the least-labelled ``x`` whose
    ``y``-neighbour is unlabelled, and gives ``x*y`` the next label.

    For each generator a pointer tracks the least-labelled ``x`` with ``x*y``
    unlabelled; labels only grow, so pointers only move forward.
    """
    n_vertices = len(graph.vertices)
    labelled = [0]
    is_labelled = [False] * n_vertices
    is_labelled[0] = True
    pointer = [0] * graph.rank
    tree: list[tuple[int, int, int]] = []
    while len(labelled) < n_vertices:
        for y in range(graph.rank):
            p = pointer[y]
            while p < len(labelled) and is_labelled[graph.neighbour[labelled[p]][y]]:
                p += 1
            pointer[y] = p
            if p < len(labelled):
                break
        else:
            raise ValueError("Cayley graph is not connected")
        x = labelled[p]
        xy = graph.neighbour[x][y]
        is_labelled[xy] = True
        labelled.append(xy)
        tree.append((x, xy, y + 1))
    v = graph.vertices
    return Labeling([v[i] for i in labelled], [(v[a], v[b], s) for a, b, s in tree])


def label_by_sorting(system: CoxeterSystem) -> Labeling:
    """Labelling from sorting ``W`` by the deletion order (no spanning tree)."""
    return Labeling(sorted(system.elements(), key=element_key(system)), [])


def stream_in_deletion_order(system: CoxeterSystem, count: int,
                             frontier_cap: int = DEFAULT_FRONTIER_CAP) -> Iterator[Element]:
    """Yield the first ``count`` elements of ``W`` in the deletion order.

    Best-first search: the next element is always adjacent to one already
    emitted, so the least element of the frontier is the next one.
    """
    key = element_key(system)
    tie = itertools.count()
    heap = [(key(system.identity), next(tie), system.identity)]
    seen = {system.identity}
    emitted = 0
    while heap and emitted < count:
        _, _, g = heapq.heappop(heap)
        yield g
        emitted += 1
        for s in system.generators:
            h = system.model.mul(g, s)
            if h not in seen:
                if len(heap) >= frontier_cap:
                    raise ResourceCapExceeded(f"stream frontier exceeded {frontier_cap} elements")
                seen.add(h)
                heapq.heappush(heap, (key(h), next(tie), h))


def cayley_embedding_image(system: CoxeterSystem, labeling: Labeling, w: Element) -> tuple[int, ...]:
    """The permutation ``L(u) -> L(u w^-1)`` of ``1..|W|``, one-line, 1-based."""
    inv_word = tuple(reversed(nf_rlex(system, w)))
    out = []
    for u in labeling.order:
        x = u
        for s in inv_word:
            x = system.model.mul(x, s)
        out.append(labeling.label[x])
    return tuple(out)


# -- exports --------------------------------------------------------------------

def table_rows(system: CoxeterSystem, labeling: Labeling) -> list[tuple[int, tuple[int, ...] | None, str]]:
    """``(L(w), permutation image or None, NF(w))`` in label order."""
    return [(k, system.image(g), format_word(nf_rlex(system, g), "s"))
            for k, g in enumerate(labeling.order, start=1)]


def _image_text(image) -> str:
    return " ".join(str(x) for x in image)


def format_table(system: CoxeterSystem, labeling: Labeling) -> str:
    """Plain-text table, one ``L | image | NF`` row per element.

    ``L`` is right-aligned to the width of ``|W|``; the image is the
    space-separated one-line image ``(1)w (2)w ...``; the identity prints as
    ``e``.  The image column is dropped for models without one.
    """
    rows = table_rows(system, labeling)
    width = len(str(len(rows)))
    lines = []
    for k, image, nf in rows:
        cells = [str(k).rjust(width)]
        if image is not None:
            cells.append(_image_text(image))
        cells.append(nf)
        lines.append(" | ".join(cells))
    return "\n".join(lines) + "\n"


def export_csv(system: CoxeterSystem, labeling: Labeling) -> str:
    """Columns ``L,permutation,NF``; ``permutation`` is omitted when the model
    has no permutation image."""
    rows = table_rows(system, labeling)
    has_image = bool(rows) and rows[0][1] is not None
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["L", "permutation", "NF"] if has_image else ["L", "NF"])
    for k, image, nf in rows:
        writer.writerow([k, _image_text(image), nf] if has_image else [k, nf])
    return buf.getvalue()


_DOT_STYLES = {1: 'color="black"', 2: 'color="grey50"', 3: 'color="black", style="dashed"'}
_DOT_CYCLE = ("blue", "red", "darkgreen", "orange", "purple")


def _edge_style(s: int) -> str:
    if s in _DOT_STYLES:
        return _DOT_STYLES[s]
    return f'color="{_DOT_CYCLE[(s - 4) % len(_DOT_CYCLE)]}", style="dotted"'


def export_dot(system: CoxeterSystem, graph: CayleyGraph, labeling: Labeling) -> str:
    """Graphviz source: nodes read ``L | NF``; tree edges are drawn bold."""
    tree = {frozenset((a, b)) for a, b, _ in labeling.tree_edges}
    lines = [f'graph "{system.name}" {{', "  node [shape=box, fontsize=10];"]
    for g in labeling.order:
        k = labeling.label[g]
        lines.append(f'  n{k} [label="{k} | {format_word(nf_rlex(system, g), "s")}"];')
    edges = sorted((min(labeling.label[graph.vertices[i]], labeling.label[graph.vertices[j]]),
                    max(labeling.label[graph.vertices[i]], labeling.label[graph.vertices[j]]), s)
                   for i, j, s in graph.edges())
    for a, b, s in edges:
        bold = frozenset((labeling.order[a - 1], labeling.order[b - 1])) in tree
        extra = ", penwidth=3" if bold else ""
        lines.append(f'  n{a} -- n{b} [label="s{s}", {_edge_style(s)}{extra}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(system: CoxeterSystem, graph: CayleyGraph, labeling: Labeling) -> str:
    rows = table_rows(system, labeling)
    lab = labeling.label
    data = {
        "system": system.name,
        "rank": system.rank,
        "order": len(rows),
        "elements": [{"L": k, "image": list(image) if image is not None else None, "nf": nf}
                     for k, image, nf in rows],
        "edges": sorted([min(lab[graph.vertices[i]], lab[graph.vertices[j]]),
                         max(lab[graph.vertices[i]], lab[graph.vertices[j]]), s]
                        for i, j, s in graph.edges()),
        "tree": [[lab[a], lab[b], s] for a, b, s in labeling.tree_edges],
    }
    return json.dumps(data, indent=1) + "\n"


def export(system: CoxeterSystem, graph: CayleyGraph, labeling: Labeling, fmt: str) -> str:
    """Render as ``"dot"``, ``"json"``, ``"csv"`` or ``"text"``."""
    if fmt in ("csv", "text") and system.image(system.identity) is None:
        log.warning("%s model has no permutation image; column omitted", system.model.name)
    if fmt == "dot":
        return export_dot(system, graph, labeling)
    if fmt == "json":
        return export_json(system, graph, labeling)
    if fmt == "csv":
        return export_csv(system, labeling)
    if fmt == "text":
        return format_table(system, labeling)
    raise InputError(f"unknown export format {fmt!r}")
