"""
The free algebra on one generator x, truncated at degree 3, and its
unitization.

    degree 0   the adjoined unit 1
    degree 1   x
    degree 2   x e_s x, one per generator
    degree 3   cosets of G⊗² ⊕ G⊗² modulo the relations

The product (x e_s x) e_t x sits at (E_st, 0) and x e_s (x e_t x) at
(0, -E_st), so a relation (L, R) says exactly that the left sum equals the
right sum. A coset is represented by the non-pivot coordinates of the reduced
vector.
"""

from typing import Dict, Hashable

from cachetools import LRUCache, cached

from pyOperadic.exactlin.matrices import Vec
from pyOperadic.exactlin.scalars import ZERO, ONE, to_scalar, format_scalar
from pyOperadic.operad.presentation import OperadPresentation, relation_subspace, require_valid

UNIT, X = "1", "x"
STAR = "★"


class UndefinedProduct(Exception):
    """1 ∘ 1 for an operation ∘ other than ★."""
    pass


class TruncationExceeded(Exception):
    pass


def degree(key) -> int:
    if key == UNIT:
        return 0
    if key == X:
        return 1
    return 2 if key[0] == "g" else 3


class UnitizedElement:
    """A finite combination of the basis 1, x, x e_s x and the degree 3 cosets."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Dict[Hashable, object] = None):
        self._coeffs = {}
        for key, c in (coeffs or {}).items():
            c = to_scalar(c)
            if c != 0:
                self._coeffs[key] = c

    @classmethod
    def one(cls) -> "UnitizedElement":
        return cls({UNIT: ONE})

    @classmethod
    def x(cls) -> "UnitizedElement":
        return cls({X: ONE})

    @classmethod
    def basis(cls, key) -> "UnitizedElement":
        return cls({key: ONE})

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other.items():
            out[k] = out.get(k, ZERO) + c
        return UnitizedElement(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = to_scalar(c)
        return UnitizedElement({k: v * c for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, UnitizedElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return "UnitizedElement({})".format(self._coeffs)


class TruncatedFree:
    """Products of basis elements of the truncated free algebra of p."""

    def __init__(self, p: OperadPresentation):
        require_valid(p)
        self.presentation = p
        n = self.n = p.n
        self._space = relation_subspace(p)
        self._free = self._space.free_columns()
        d = n * n
        ambient = p.ambient_dim
        self._left = [[self.project(Vec.unit(ambient, s * n + t)) for t in range(n)] for s in range(n)]
        self._right = [[self.project(-Vec.unit(ambient, d + s * n + t)) for t in range(n)] for s in range(n)]

    @property
    def star(self) -> Vec:
        return self.presentation.star

    @property
    def dim_deg3(self) -> int:
        return len(self._free)

    def project(self, v: Vec) -> Dict[Hashable, object]:
        """Coset coordinates of a vector of G⊗² ⊕ G⊗²."""
        red = self._space.reduce(v)
        return {("q", k): red[i] for k, i in enumerate(self._free) if red[i] != 0}

    def operation(self, op) -> Vec:
        """Coefficients of op: a generator index or label, STAR, or a coordinate vector."""
        if isinstance(op, Vec):
            if op.dim != self.n:
                raise ValueError("Operation has {} coordinates for {} generators".format(op.dim, self.n))
            return op
        if op == STAR:
            return self.star
        if isinstance(op, str):
            return Vec.unit(self.n, self.presentation.index(op))
        if isinstance(op, int) and 0 <= op < self.n:
            return Vec.unit(self.n, op)
        raise ValueError("Unknown operation {!r}".format(op))

    def product(self, k1, s: int, k2) -> Dict[Hashable, object]:
        """k1 e_s k2 for non-unit basis keys."""
        if k1 == X and k2 == X:
            return {("g", s): ONE}
        if k2 == X and degree(k1) == 2:
            return self._left[k1[1]][s]
        if k1 == X and degree(k2) == 2:
            return self._right[s][k2[1]]
        raise TruncationExceeded("Product of degrees {} and {} is beyond the truncation".format(
            degree(k1), degree(k2)))

    def label(self, key) -> str:
        gens = self.presentation.gens
        if key in (UNIT, X):
            return key
        if key[0] == "g":
            return "x{}x".format(gens[key[1]])
        i = self._free[key[1]]
        d = self.n * self.n
        slot, rest = divmod(i, d)
        s, t = divmod(rest, self.n)
        if slot == 0:
            return "(x{}x){}x".format(gens[s], gens[t])
        return "-x{}(x{}x)".format(gens[s], gens[t])

    def format(self, u: UnitizedElement) -> Dict[str, str]:
        return {self.label(k): format_scalar(c) for k, c in u.items()}


@cached(cache=LRUCache(maxsize=64))
def truncated_free(p: OperadPresentation) -> TruncatedFree:
    return TruncatedFree(p)


def dim_deg3(f) -> int:
    """2n² - dim R; accepts a TruncatedFree or a presentation."""
    if isinstance(f, OperadPresentation):
        f = truncated_free(f)
    return f.dim_deg3


def mul_free(f: TruncatedFree, u: UnitizedElement, op, v: UnitizedElement, action=None) -> UnitizedElement:
    """
    u op v in the unitized algebra: a op 1 = α(op) a, 1 op a = β(op) a, and
    1 op 1 = 1 only for op = ★.
    """
    c = f.operation(op)
    out = {}

    def add(key, value):
        out[key] = out.get(key, ZERO) + value

    for k1, c1 in u.items():
        for k2, c2 in v.items():
            coeff = c1 * c2
            if k1 == UNIT and k2 == UNIT:
                if c != f.star:
                    raise UndefinedProduct("1 {} 1 is undefined".format(c))
                add(UNIT, coeff)
            elif k1 == UNIT or k2 == UNIT:
                if action is None:
                    raise ValueError("Products with the unit need a unit action")
                scale = action.alpha.dot(c) if k2 == UNIT else action.beta.dot(c)
                if scale != 0:
                    add(k1 if k2 == UNIT else k2, coeff * scale)
            else:
                for s, cs in enumerate(c):
                    if cs == 0:
                        continue
                    for key, value in f.product(k1, s, k2).items():
                        add(key, coeff * cs * value)
    return UnitizedElement(out)
