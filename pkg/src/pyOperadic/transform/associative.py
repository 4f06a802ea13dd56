"""
Associativity detection: x is associative in p when (x⊗x, x⊗x) lies in the
relation space.
"""

from functools import reduce
from typing import List, Union

import sympy

from pyOperadic.exactlin.matrices import Vec, Mat, DimensionError
from pyOperadic.exactlin.scalars import ZERO, to_sympy, from_sympy
from pyOperadic.exactlin.subspace import member
from pyOperadic.operad.presentation import RelPair
from pyOperadic.transform.duality import relation_space


class _AllT:
    """Returned by find_associative_on_line when every point of the line is associative."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AllT"


ALL_T = _AllT()


def _check_dim(p, x: Vec, what: str):
    if x.dim != p.n:
        raise DimensionError("{} has {} coordinates for {} generators".format(what, x.dim, p.n))


def check_associative(p, x) -> bool:
    x = x if isinstance(x, Vec) else Vec(x)
    _check_dim(p, x, "Operation")
    return member(relation_space(p), RelPair.associator(x).flatten())


def find_associative_on_line(p, x0, d) -> Union[_AllT, List]:
    """
    Rational t with x0 + t·d associative, or ALL_T. The remainder of the
    associator modulo R is quadratic in t; irrational roots are dropped.
    """
    x0 = x0 if isinstance(x0, Vec) else Vec(x0)
    d = d if isinstance(d, Vec) else Vec(d)
    _check_dim(p, x0, "Base point")
    _check_dim(p, d, "Direction")
    if d.is_zero():
        raise ValueError("Direction of the line must be nonzero")
    space = relation_space(p)
    cross = Mat.outer(x0, d) + Mat.outer(d, x0)
    coeffs = [
        space.reduce(RelPair.associator(x0).flatten()),
        space.reduce(RelPair(cross, cross).flatten()),
        space.reduce(RelPair.associator(d).flatten()),
    ]
    t = sympy.Symbol("t")
    polys = []
    for i in range(space.ambient_dim):
        c0, c1, c2 = (c[i] for c in coeffs)
        if c0 == ZERO and c1 == ZERO and c2 == ZERO:
            continue
        polys.append(sympy.Poly(to_sympy(c2) * t ** 2 + to_sympy(c1) * t + to_sympy(c0), t, domain=sympy.QQ))
    if not polys:
        return ALL_T
    g = reduce(lambda f, h: f.gcd(h), polys)
    if g.degree() <= 0:
        return []
    return sorted(from_sympy(r) for r in g.ground_roots())
