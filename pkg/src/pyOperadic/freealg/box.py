"""
The box product on A₊⊗B₊ with A = B the truncated free algebra:

    (a⊗b) ⊡_op (a'⊗b') = (a ★ a') ⊗ (b op b')    if b⊗b' ≠ 1⊗1
                         (a op a') ⊗ 1           otherwise

The 1⊗1 coordinate is the adjoined unit of (A⊠B)₊.
"""

from typing import Dict, Hashable, Tuple

from pyOperadic.exactlin.scalars import ZERO, ONE, to_scalar, format_scalar
from pyOperadic.freealg.truncated import TruncatedFree, UnitizedElement, mul_free, UNIT, STAR

Key = Tuple[Hashable, Hashable]


class BoxElement:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Dict[Key, object] = None):
        self._coeffs = {}
        for key, c in (coeffs or {}).items():
            c = to_scalar(c)
            if c != 0:
                self._coeffs[key] = c

    @classmethod
    def basis(cls, ka, kb) -> "BoxElement":
        return cls({(ka, kb): ONE})

    def items(self):
        return self._coeffs.items()

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other):
        out = dict(self._coeffs)
        for k, c in other.items():
            out[k] = out.get(k, ZERO) + c
        return BoxElement(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = to_scalar(c)
        return BoxElement({k: v * c for k, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BoxElement):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return "BoxElement({})".format(self._coeffs)

    def format(self, f: TruncatedFree) -> Dict[str, str]:
        return {"{}⊗{}".format(f.label(ka), f.label(kb)): format_scalar(c) for (ka, kb), c in self._coeffs.items()}


def mul_box(f: TruncatedFree, e1: BoxElement, op, e2: BoxElement, action) -> BoxElement:
    """Bilinear extension of the box rule; UndefinedProduct propagates."""
    out = {}
    one = UnitizedElement.one()
    for (a1, b1), c1 in e1.items():
        for (a2, b2), c2 in e2.items():
            ua, va = UnitizedElement.basis(a1), UnitizedElement.basis(a2)
            if b1 == UNIT and b2 == UNIT:
                left, right = mul_free(f, ua, op, va, action), one
            else:
                left = mul_free(f, ua, STAR, va, action)
                right = mul_free(f, UnitizedElement.basis(b1), op, UnitizedElement.basis(b2), action)
            coeff = c1 * c2
            for ka, ca in left.items():
                for kb, cb in right.items():
                    out[(ka, kb)] = out.get((ka, kb), ZERO) + coeff * ca * cb
    return BoxElement(out)
