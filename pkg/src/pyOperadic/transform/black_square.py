"""
Black-square products of presentations and of unit actions.

Generator i1 of p1 and i2 of p2 become generator i1·n2 + i2 of the product,
labelled "l|r". With this ordering (p1 ⊠ p2) ⊠ p3 and p1 ⊠ (p2 ⊠ p3) agree
coordinate by coordinate.
"""

from functools import reduce

from pyOperadic.exactlin.matrices import kron
from pyOperadic.operad.presentation import OperadPresentation, RelPair, relation_subspace, require_valid
from pyOperadic.unit_action.criterion import UnitAction
from pyOperadic.utils.printing import logger


def black_square(p1: OperadPresentation, p2: OperadPresentation) -> OperadPresentation:
    require_valid(p1)
    require_valid(p2)
    gens = ["{}|{}".format(a, b) for a in p1.gens for b in p2.gens]
    relations = [
        RelPair(kron(r1.left, r2.left), kron(r1.right, r2.right))
        for r1 in p1.relations for r2 in p2.relations
    ]
    p = OperadPresentation("{}⊠{}".format(p1.name, p2.name), gens, relations, kron(p1.star, p2.star))
    span = relation_subspace(p)
    if span.dim != len(relations):
        logger("product relations are dependent, keeping a basis of dimension", span.dim)
        p = OperadPresentation(p.name, gens, [RelPair.from_flat(v, p.n) for v in span.vectors()], p.star)
    logger("{}: {} generators, {} relations".format(p.name, p.n, len(p.relations)))
    return require_valid(p)


def black_square_all(*presentations: OperadPresentation) -> OperadPresentation:
    """Left-nested product p1 ⊠ p2 ⊠ ... ⊠ pk."""
    if not presentations:
        raise ValueError("black_square_all needs at least one presentation")
    return reduce(black_square, presentations)


def product_action(u1: UnitAction, u2: UnitAction) -> UnitAction:
    """α = α1⊗α2 and β = β1⊗β2 on the product generators."""
    return UnitAction(kron(u1.alpha, u2.alpha), kron(u1.beta, u2.beta))
