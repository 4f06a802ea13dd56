"""
Canonical relation spaces in a basis op_1..op_n with ★ = Σ op_i.

An operad has a coherent (resp. compatible) unit action with α≠β or α=β iff,
in some such basis, its relation space sits inside the matching space below.
Indices here are zero-based: op_1 is index 0.
"""

from typing import List

from pyOperadic.exactlin.matrices import Vec, Mat
from pyOperadic.exactlin.subspace import Subspace
from pyOperadic.operad.presentation import RelPair

KINDS = ("coh_neq", "coh_eq", "comp_neq", "comp_eq")


def _op(n, i) -> Vec:
    return Vec.unit(n, i)


def _star(n) -> Vec:
    return Vec([1] * n)


def _t(u: Vec, v: Vec) -> Mat:
    return Mat.outer(u, v)


def _pair(n, left=None, right=None) -> RelPair:
    zero = Mat.zeros(n, n)
    return RelPair(left if left is not None else zero, right if right is not None else zero)


def _separated(n, lo) -> List[RelPair]:
    # (op_i⊗op_j, 0) and (0, op_i⊗op_j) for lo <= i, j < n
    out = []
    for i in range(lo, n):
        for j in range(lo, n):
            out.append(_pair(n, left=_t(_op(n, i), _op(n, j))))
            out.append(_pair(n, right=_t(_op(n, i), _op(n, j))))
    return out


def _shared_neq(n, first: RelPair, second: RelPair) -> List[RelPair]:
    op = lambda i: _op(n, i)
    out = [first, second]
    out += [_pair(n, _t(op(i), op(0)), _t(op(i), op(0))) for i in range(1, n)]
    out += [_pair(n, _t(op(1), op(j)), _t(op(1), op(j))) for j in range(2, n)]
    out += [_pair(n, _t(op(0), op(i)), _t(op(i), op(1))) for i in range(2, n)]
    return out


def coh_neq_basis(n: int) -> List[RelPair]:
    op = lambda i: _op(n, i)
    star = _star(n)
    out = _shared_neq(n,
                      _pair(n, _t(star, op(1)), _t(op(1), op(1))),
                      _pair(n, _t(op(0), op(0)), _t(op(0), star)))
    return out + _separated(n, 2)


def comp_neq_basis(n: int) -> List[RelPair]:
    op = lambda i: _op(n, i)
    s12 = op(0) + op(1)
    out = _shared_neq(n,
                      _pair(n, _t(s12, op(1)), _t(op(1), op(1))),
                      _pair(n, _t(op(0), op(0)), _t(op(0), s12)))
    for i in range(2, n):
        out.append(_pair(n, left=_t(op(i), op(1))))
        out.append(_pair(n, right=_t(op(0), op(i))))
    return out + _separated(n, 2)


def coh_eq_basis(n: int) -> List[RelPair]:
    op = lambda i: _op(n, i)
    star = _star(n)
    first = _pair(n, _t(op(0), star), _t(op(0), star)) \
        + _pair(n, _t(star, op(0)), _t(star, op(0))) \
        + _pair(n, _t(op(0), op(0)), _t(op(0), op(0))) * -1
    return [first] + _separated(n, 1)


def comp_eq_basis(n: int) -> List[RelPair]:
    op = lambda i: _op(n, i)
    out = [_pair(n, _t(op(0), op(0)), _t(op(0), op(0)))]
    for i in range(1, n):
        out.append(_pair(n, _t(op(0), op(i)), _t(op(0), op(i)))
                   + _pair(n, _t(op(i), op(0)), _t(op(i), op(0))))
    return out + _separated(n, 1)


_BUILDERS = {
    "coh_neq": (coh_neq_basis, 2),
    "coh_eq": (coh_eq_basis, 1),
    "comp_neq": (comp_neq_basis, 2),
    "comp_eq": (comp_eq_basis, 1),
}


def canonical_basis(kind: str, n: int) -> List[RelPair]:
    if kind not in _BUILDERS:
        raise ValueError("Kind must be one of {}, not '{}'".format(list(KINDS), kind))
    builder, least = _BUILDERS[kind]
    if n < least:
        raise ValueError("{} needs at least {} generators, got {}".format(kind, least, n))
    return builder(n)


def canonical_space(kind: str, n: int) -> Subspace:
    return Subspace(2 * n * n, [r.flatten() for r in canonical_basis(kind, n)])
