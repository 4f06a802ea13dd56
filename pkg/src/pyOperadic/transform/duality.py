"""
Koszul duals through the signed pairing

    <(L, R), (Γ, Δ)> = Σ L[s,t] Γ[s,t] - Σ R[s,t] Δ[s,t]

on G⊗² ⊕ G⊗². The dual carries no distinguished operation; every diagonal
(ěᵢ⊗ěᵢ, ěᵢ⊗ěᵢ) lying in the dual relation space is offered as a candidate.
"""

from typing import List

from pyOperadic.exactlin.matrices import Vec, Mat
from pyOperadic.exactlin.subspace import Subspace, annihilator, member
from pyOperadic.operad.presentation import OperadPresentation, RelPair, PresentationError, require_valid
from pyOperadic.utils.printing import logger

DUAL_MARK = "!"


def signed_pairing(n: int) -> Mat:
    d = n * n
    return Mat(2 * d, 2 * d, [
        (1 if i < d else -1) if i == j else 0
        for i in range(2 * d) for j in range(2 * d)
    ])


def dual_label(label: str) -> str:
    if label.startswith(DUAL_MARK):
        return label[len(DUAL_MARK):]
    return DUAL_MARK + label


class DualPresentation:
    """Generators and relations of a dual operad, before a star is chosen."""

    def __init__(self, name: str, gens, relations: List[RelPair], candidates: List[Vec]):
        self.name = name
        self.gens = tuple(gens)
        self.relations = tuple(relations)
        self.candidates = list(candidates)
        self._subspace = None

    @property
    def n(self) -> int:
        return len(self.gens)

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n * self.n

    @property
    def subspace(self) -> Subspace:
        if self._subspace is None:
            self._subspace = Subspace(self.ambient_dim, [r.flatten() for r in self.relations])
        return self._subspace

    def with_star(self, star) -> OperadPresentation:
        """The dual as a presentation with star as its distinguished operation."""
        star = star if isinstance(star, Vec) else Vec(star)
        if star.dim != self.n:
            raise PresentationError("Star has {} coordinates for {} generators".format(star.dim, self.n))
        return require_valid(OperadPresentation(self.name, self.gens, self.relations, star))

    def __repr__(self):
        return "DualPresentation(name={!r}, gens={}, relations={}, candidates={})".format(
            self.name, list(self.gens), len(self.relations), len(self.candidates))


def relation_space(p) -> Subspace:
    if isinstance(p, DualPresentation):
        return p.subspace
    return Subspace(p.ambient_dim, [r.flatten() for r in p.relations])


def diagonal_candidates(n: int, space: Subspace) -> List[Vec]:
    out = []
    for i in range(n):
        e = Vec.unit(n, i)
        if member(space, RelPair.associator(e).flatten()):
            out.append(e)
    return out


def dual(p) -> DualPresentation:
    """R⊥ over the dual labels. Accepts an OperadPresentation or a DualPresentation."""
    n = p.n
    perp = annihilator(relation_space(p), signed_pairing(n))
    relations = [RelPair.from_flat(v, n) for v in perp.vectors()]
    candidates = diagonal_candidates(n, perp)
    logger("dual of {}: {} relations, {} diagonal associative candidates".format(
        p.name, len(relations), len(candidates)))
    return DualPresentation(dual_label(p.name), [dual_label(g) for g in p.gens], relations, candidates)
