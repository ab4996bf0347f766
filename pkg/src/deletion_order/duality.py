"""Longest elements, minimal coset representatives and the duality property
``L(w) + L(w0 w) = |W| + 1``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cayley import Labeling, build_cayley, label_by_sorting, successor_label
from .coxeter import CoxeterSystem, Element
from .errors import InfiniteGroupError
from .normal_forms import element_key, nf_rlex
from .words import Word, format_word

# above this many elements duality_report labels by sorting, not by the graph
GRAPH_LABELING_LIMIT = 50_000


def _require_finite(system: CoxeterSystem) -> None:
    if not system.is_finite():
        raise InfiniteGroupError(f"{system.name} is infinite")


def longest_element(system: CoxeterSystem) -> Element:
    """Climb by any ascent until every generator is a right descent."""
    _require_finite(system)
    g = system.identity
    while True:
        descents = system.right_descents(g)
        ascents = [s for s in system.generators if s not in descents]
        if not ascents:
            return g
        g = system.model.mul(g, ascents[0])


def coset_representative(system: CoxeterSystem, g: Element, subset: Iterable[int]) -> Element:
    """Minimal-length element of the left coset ``g W_subset``."""
    subset = set(subset)
    while True:
        ds = system.right_descents(g) & subset
        if not ds:
            return g
        g = system.model.mul(g, min(ds))


def minimal_coset_reps(system: CoxeterSystem, subset: Iterable[int] | None = None) -> list[Element]:
    """Minimal left coset representatives of ``W_subset`` (default: all
    generators but the greatest), listed in the deletion order."""
    _require_finite(system)
    subset = set(range(1, system.rank) if subset is None else subset)
    reps = [g for g in system.elements() if not (system.right_descents(g) & subset)]
    return sorted(reps, key=element_key(system))


@dataclass(frozen=True)
class Defect:
    word: Word
    label: int
    dual_label: int

    @property
    def total(self) -> int:
        return self.label + self.dual_label


@dataclass
class DualityReport:
    system: str
    order: int
    parabolic_order: int
    defects: list[Defect] = field(default_factory=list)
    coset_rep_labels: list[tuple[Word, int, int]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.defects

    def to_dict(self, defects_only: bool = False) -> dict:
        out = {
            "system": self.system,
            "order": self.order,
            "parabolic_order": self.parabolic_order,
            "holds": self.holds,
            "defects": [{"w": format_word(d.word, "s"), "L": d.label, "L_w0w": d.dual_label,
                         "sum": d.total} for d in self.defects],
        }
        if not defects_only:
            out["coset_reps"] = [{"c": format_word(c, "s"), "length": n, "L": k}
                                 for c, n, k in self.coset_rep_labels]
        return out

    def format(self, defects_only: bool = False) -> str:
        lines = []
        if not defects_only:
            lines.append(f"{self.system}: |W| = {self.order}, |X| = {self.parabolic_order}, "
                         f"duality {'holds' if self.holds else 'fails'} "
                         f"({len(self.defects)} defects)")
            lines.append("coset representatives (c, l(c), L(c)):")
            for c, n, k in self.coset_rep_labels:
                lines.append(f"  {format_word(c, 's')} {n} {k}")
            if self.defects:
                lines.append("defects (w, L(w), L(w0 w), sum):")
        for d in self.defects:
            lines.append(f"  {format_word(d.word, 's')} {d.label} {d.dual_label} {d.total}")
        return "\n".join(lines) + "\n"


def labeling_for(system: CoxeterSystem, method: str = "auto") -> Labeling:
    """``"graph"`` runs the successor algorithm; ``"sort"`` sorts by the
    comparator; ``"auto"`` picks by group size."""
    if method == "auto":
        method = "graph" if system.order() <= GRAPH_LABELING_LIMIT else "sort"
    if method == "graph":
        return successor_label(build_cayley(system))
    if method == "sort":
        return label_by_sorting(system)
    raise ValueError(f"unknown labelling method {method!r}")


def duality_report(system: CoxeterSystem, method: str = "auto", labeling: Labeling | None = None) -> DualityReport:
    _require_finite(system)
    if labeling is None:
        labeling = labeling_for(system, method)
    L = labeling.label
    w0 = longest_element(system)
    size = len(labeling)
    parabolic_order = system.parabolic(range(1, system.rank)).order() if system.rank > 1 else 1
    report = DualityReport(system.name, size, parabolic_order)
    for w in labeling.order:
        dual = system.multiply(w0, w)
        if L[w] + L[dual] != size + 1:
            report.defects.append(Defect(nf_rlex(system, w), L[w], L[dual]))
    for c in minimal_coset_reps(system):
        report.coset_rep_labels.append((nf_rlex(system, c), system.length(c), L[c]))
    return report

