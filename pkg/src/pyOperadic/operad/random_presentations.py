"""
Seeded random presentations for property tests and examples.
"""

import numpy as np

from pyOperadic.exactlin.matrices import Vec, Mat, rank
from pyOperadic.exactlin.subspace import Subspace
from pyOperadic.operad.presentation import OperadPresentation, RelPair, change_basis
from pyOperadic.operad.canonical import canonical_basis


def _ints(rng, size, low=-2, high=3):
    return [int(x) for x in rng.integers(low, high, size=size)]


def random_invertible(rng, n: int, low=-2, high=3) -> Mat:
    while True:
        m = Mat(n, n, _ints(rng, n * n, low, high))
        if rank(m) == n:
            return m


def _random_combinations(rng, vectors, count, ambient):
    out = []
    for _ in range(count):
        coeffs = _ints(rng, len(vectors))
        v = Vec.zeros(ambient)
        for c, w in zip(coeffs, vectors):
            if c != 0:
                v = v + w * c
        out.append(v)
    return out


def _presentation(name, n, vectors, star, rng=None) -> OperadPresentation:
    span = Subspace(2 * n * n, vectors)
    basis = span.vectors()
    if rng is not None and span.dim > 0:
        mix = random_invertible(rng, span.dim)
        basis = (mix @ span.basis).row_list()
    relations = [RelPair.from_flat(v, n) for v in basis]
    gens = ["op{}".format(i + 1) for i in range(n)]
    return OperadPresentation(name, gens, relations, star)


def random_presentation(rng, n: int, extra: int = None) -> OperadPresentation:
    """A valid presentation whose relations are the associator of a random star plus random vectors."""
    ambient = 2 * n * n
    star = Vec([0] * n)
    while star.is_zero():
        star = Vec(_ints(rng, n))
    if extra is None:
        extra = int(rng.integers(0, ambient))
    vectors = [RelPair.associator(star).flatten()]
    vectors += [Vec(_ints(rng, ambient)) for _ in range(extra)]
    return _presentation("random{}".format(n), n, vectors, star, rng)


def random_canonical_presentation(rng, kind: str, n: int, dim: int = None,
                                  rebase: bool = False) -> OperadPresentation:
    """
    A presentation whose relation space is a random subspace of the canonical
    space of kind containing the associator of ★ = Σ op_i, listed in a random
    basis. With rebase, the result is also moved to a random generator basis.
    """
    ambient = 2 * n * n
    star = Vec([1] * n)
    basis = [r.flatten() for r in canonical_basis(kind, n)]
    if dim is None:
        dim = int(rng.integers(1, len(basis) + 1))
    target = Subspace(ambient, [RelPair.associator(star).flatten()])
    while target.dim < dim:
        candidate = _random_combinations(rng, basis, 1, ambient)[0]
        target = target + Subspace(ambient, [candidate])
    p = _presentation("{}-sub{}".format(kind, n), n, target.vectors(), star, rng)
    if rebase:
        p = change_basis(p, random_invertible(rng, n))
    return p


def default_rng(seed: int):
    return np.random.default_rng(seed)
