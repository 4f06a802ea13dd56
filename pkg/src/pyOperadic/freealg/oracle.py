"""
Brute-force check of a unit action against the definition of coherence,
evaluated on the free algebra on one generator.

Coherent mode substitutes a⊗b, a'⊗b', a''⊗b'' with every a, b in {1, x} and
(b, b', b'') ≠ (1, 1, 1) into each relation of the box product algebra.
Compatible mode substitutes the three single-unit triples into the relations
of the unitized algebra itself. An instance is skipped as soon as one of its
terms is undefined.
"""

import itertools
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from tqdm import tqdm

from pyOperadic.exactlin.matrices import Vec
from pyOperadic.exactlin.scalars import parse_scalar
from pyOperadic.freealg.box import BoxElement, mul_box
from pyOperadic.freealg.truncated import (
    UnitizedElement, UndefinedProduct, TruncationExceeded, truncated_free, mul_free, UNIT, X,
)
from pyOperadic.operad.presentation import OperadPresentation
from pyOperadic.unit_action.criterion import UnitAction, check, check_action, _check_mode
from pyOperadic.utils.printing import logger

GRID_VALUES = ("0", "1", "-1", "1/2")
GRID_SAMPLE = 500

TRIPLES = list(itertools.product((UNIT, X), repeat=3))
COHERENT_B_TRIPLES = [b for b in TRIPLES if b != (UNIT, UNIT, UNIT)]
SINGLE_UNIT_TRIPLES = [(UNIT, X, X), (X, UNIT, X), (X, X, UNIT)]


class Counterexample(NamedTuple):
    relation_index: int
    a_triple: Optional[Tuple[str, str, str]]
    b_triple: Tuple[str, str, str]
    lhs: object
    rhs: object


class OracleResult(NamedTuple):
    holds: bool
    counterexample: Optional[Counterexample]
    evaluated: int
    skipped: int


class Disagreement(NamedTuple):
    action: UnitAction
    oracle: bool
    criterion: bool


def _terms(m):
    n = m.rows
    return [(s, t, m[s, t]) for s in range(n) for t in range(n) if m[s, t] != 0]


def _coherent_instance(f, r, action, a, b):
    X1, Y1, Z1 = (BoxElement.basis(ai, bi) for ai, bi in zip(a, b))
    lhs, rhs = BoxElement(), BoxElement()
    for s, t, c in _terms(r.left):
        lhs = lhs + mul_box(f, mul_box(f, X1, s, Y1, action), t, Z1, action) * c
    for s, t, c in _terms(r.right):
        rhs = rhs + mul_box(f, X1, s, mul_box(f, Y1, t, Z1, action), action) * c
    return lhs, rhs


def _compatible_instance(f, r, action, b):
    u, v, w = (UnitizedElement.basis(k) for k in b)
    lhs, rhs = UnitizedElement(), UnitizedElement()
    for s, t, c in _terms(r.left):
        lhs = lhs + mul_free(f, mul_free(f, u, s, v, action), t, w, action) * c
    for s, t, c in _terms(r.right):
        rhs = rhs + mul_free(f, u, s, mul_free(f, v, t, w, action), action) * c
    return lhs, rhs


def _instances(p, mode):
    for i in range(len(p.relations)):
        if mode == "coherent":
            for a in TRIPLES:
                for b in COHERENT_B_TRIPLES:
                    yield i, a, b
        else:
            for b in SINGLE_UNIT_TRIPLES:
                yield i, None, b


def _evaluate(f, p, u, mode, i, a, b):
    r = p.relations[i]
    try:
        if mode == "coherent":
            return _coherent_instance(f, r, u, a, b)
        return _compatible_instance(f, r, u, b)
    except TruncationExceeded as err:
        raise RuntimeError("Oracle left the truncated range on relation {}, {} {}: {}".format(i, a, b, err))


def undefined_instances(p: OperadPresentation, u: UnitAction, mode: str = "coherent") -> List[tuple]:
    """The (relation, a-triple, b-triple) instances with an undefined term on either side."""
    _check_mode(mode)
    check_action(p, u)
    f = truncated_free(p)
    out = []
    for i, a, b in _instances(p, mode):
        try:
            _evaluate(f, p, u, mode, i, a, b)
        except UndefinedProduct:
            out.append((i, a, b))
    return out


def oracle(p: OperadPresentation, u: UnitAction, mode: str = "coherent") -> OracleResult:
    """Evaluate every instance in order and stop at the first one whose sides differ."""
    _check_mode(mode)
    check_action(p, u)
    f = truncated_free(p)
    evaluated = skipped = 0
    for i, a, b in _instances(p, mode):
        try:
            lhs, rhs = _evaluate(f, p, u, mode, i, a, b)
        except UndefinedProduct:
            skipped += 1
            continue
        evaluated += 1
        if lhs != rhs:
            return OracleResult(False, Counterexample(i, a, b, lhs, rhs), evaluated, skipped)
    return OracleResult(True, None, evaluated, skipped)


def _normalized_functionals(star: Vec, values) -> List[Vec]:
    return [Vec(c) for c in itertools.product(values, repeat=star.dim) if Vec(c).dot(star) == 1]


def action_grid(p: OperadPresentation, values=GRID_VALUES, sample: Optional[int] = GRID_SAMPLE,
                seed: int = 0) -> List[UnitAction]:
    """
    Normalized actions with coordinates in values. When there are more than
    sample of them, a seeded subsample in grid order is returned.
    """
    values = [parse_scalar(v) if isinstance(v, str) else v for v in values]
    functionals = _normalized_functionals(p.star, values)
    grid = [UnitAction(a, b) for a in functionals for b in functionals]
    if sample is not None and len(grid) > sample:
        rng = np.random.default_rng(seed)
        keep = sorted(int(i) for i in rng.choice(len(grid), size=sample, replace=False))
        grid = [grid[i] for i in keep]
    return grid


def oracle_grid(p: OperadPresentation, mode: str = "coherent", values=GRID_VALUES,
                sample: Optional[int] = GRID_SAMPLE, seed: int = 0, progress: bool = False) -> List[Disagreement]:
    """Every grid action on which the oracle and the criterion disagree."""
    grid = action_grid(p, values, sample, seed)
    logger("{} oracle sweep over {} actions of {}".format(mode, len(grid), p.name))
    out = []
    for u in tqdm(grid, desc="{} {}".format(p.name, mode), disable=not progress):
        by_oracle = oracle(p, u, mode).holds
        by_criterion = check(p, u, mode).holds
        if by_oracle != by_criterion:
            out.append(Disagreement(u, by_oracle, by_criterion))
    return out
