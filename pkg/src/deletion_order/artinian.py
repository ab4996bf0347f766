"""When does every element have finitely many predecessors?

The deletion order on ``W`` is Artinian exactly when the standard parabolic
on all generators but the greatest is finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import Labeling, label_by_sorting
from .coxeter import CoxeterSystem, Element, components
from .normal_forms import coset_decompose, nf_rlex
from .words import lambda_count


def is_artinian(system: CoxeterSystem) -> bool:
    return system.is_finite(range(1, system.rank))


@dataclass
class ArtinianReport:
    system: str
    verdicts: dict[int, bool]  # greatest generator -> Artinian?
    all_orders: bool
    tag: str  # "finite", "affine-or-compact-hyperbolic-candidate" or "other"

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "verdicts": {f"s{t}": v for t, v in self.verdicts.items()},
            "all_orders": self.all_orders,
            "tag": self.tag,
        }

    def __str__(self) -> str:
        lines = [f"{self.system}: Artinian for every generator order: {'yes' if self.all_orders else 'no'}"]
        for t, v in self.verdicts.items():
            lines.append(f"  greatest generator s{t}: {'Artinian' if v else 'not Artinian'}")
        lines.append(f"  classification: {self.tag}")
        return "\n".join(lines)


def artinian_all_orders(system: CoxeterSystem) -> ArtinianReport:
    """Verdict for each choice of greatest generator.

    Only which generator is greatest matters, so ``n`` checks cover all
    ``n!`` orders.  An irreducible infinite system whose maximal proper
    parabolics are all finite is tagged as an affine or compact hyperbolic
    candidate.
    """
    gens = list(system.generators)
    verdicts = {t: system.is_finite([s for s in gens if s != t]) for t in gens}
    all_orders = all(verdicts.values())
    if system.is_finite():
        tag = "finite"
    elif all_orders and len(components(system.matrix)) == 1:
        tag = "affine-or-compact-hyperbolic-candidate"
    else:
        tag = "other"
    return ArtinianReport(system.name, verdicts, all_orders, tag)


@dataclass(frozen=True)
class L0Check:
    """Both readings of the predecessor-count decomposition for one element.

    ``per_index`` is ``sum_i L_0(w_i)`` over the coset factors; ``literal``
    is ``n * L_0(w_n)``, the formula read with the index fixed at ``n``.
    """

    lhs: int
    per_index: int
    literal: int

    @property
    def per_index_holds(self) -> bool:
        return self.lhs == self.per_index

    @property
    def literal_holds(self) -> bool:
        return self.lhs == self.literal


def l0_decomposition_check(system: CoxeterSystem, g: Element, labeling: Labeling | None = None) -> L0Check:
    """Compare ``L_0(g)`` (number of elements below ``g``) with the sums built
    from its coset decomposition.  Finite systems only."""
    if labeling is None:
        labeling = label_by_sorting(system)

    def l0(x):
        return labeling.label[x] - 1

    factors = coset_decompose(system, g).factors
    return L0Check(l0(g), sum(l0(w) for w in factors), system.rank * l0(factors[0]))


def predecessor_bound(system: CoxeterSystem, g: Element) -> int:
    """``|W_{s_1..s_(n-1)}| ** (lambda_n(NF(g)) + 1)``, an upper bound on the
    number of elements below ``g`` when that parabolic is finite."""
    n = system.rank
    parabolic = system.parabolic(range(1, n)).order() if n > 1 else 1
    return parabolic ** (lambda_count(nf_rlex(system, g), n) + 1)
