"""
Unit actions and the coherence criterion.

For a relation (L, R) and an action with a = α, b = β, the five equations are

    C1   bᵀ·L = bᵀ·R
    C2   Lᵀ·a = R·b
    C3   L·a  = R·a
    C4   L·b  = (bᵀ·R·b) ★
    C5   (aᵀ·L·a) ★ = Rᵀ·a

C1-C3 characterise compatible actions and C1-C5 coherent ones.
"""

from typing import List, NamedTuple

from pyOperadic.exactlin.matrices import Vec, DimensionError
from pyOperadic.operad.presentation import OperadPresentation, RelPair, transport_functional

MODES = ("coherent", "compatible")
TAGS = ("C1", "C2", "C3", "C4", "C5")
COMPATIBLE_TAGS = TAGS[:3]


class NormalizationError(ValueError):
    pass


class UnitAction:
    """A pair of functionals (α, β) on the generators, given by their values on the basis."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha, beta):
        alpha = alpha if isinstance(alpha, Vec) else Vec(alpha)
        beta = beta if isinstance(beta, Vec) else Vec(beta)
        if alpha.dim != beta.dim:
            raise DimensionError("α has {} coordinates but β has {}".format(alpha.dim, beta.dim))
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def from_vector(cls, v: Vec) -> "UnitAction":
        n = v.dim // 2
        return cls(Vec(v.entries[:n]), Vec(v.entries[n:]))

    @property
    def n(self) -> int:
        return self.alpha.dim

    def as_vector(self) -> Vec:
        return self.alpha.concat(self.beta)

    def is_normalized(self, star: Vec) -> bool:
        return self.alpha.dot(star) == 1 and self.beta.dot(star) == 1

    def transported(self, t) -> "UnitAction":
        """The same functionals in the coordinates of the basis given by the columns of t."""
        return UnitAction(transport_functional(self.alpha, t), transport_functional(self.beta, t))

    def opposite(self) -> "UnitAction":
        """The action on the opposite operad: left and right units trade places."""
        return UnitAction(self.beta, self.alpha)

    @property
    def symmetric(self) -> bool:
        return self.alpha == self.beta

    def __eq__(self, other):
        if not isinstance(other, UnitAction):
            return NotImplemented
        return self.alpha == other.alpha and self.beta == other.beta

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return "UnitAction(alpha={}, beta={})".format(self.alpha, self.beta)


class Failure(NamedTuple):
    relation: int
    tag: str
    residual: Vec


class Verdict:
    """Outcome of checking an action equation by equation."""

    def __init__(self, mode: str, coherent: bool, compatible: bool, failures: List[Failure]):
        self.mode = mode
        self.coherent = coherent
        self.compatible = compatible
        self.failures = failures

    @property
    def holds(self) -> bool:
        return self.coherent if self.mode == "coherent" else self.compatible

    def __repr__(self):
        return "Verdict(mode={}, coherent={}, compatible={}, failures={})".format(
            self.mode, self.coherent, self.compatible, len(self.failures))


def residuals(r: RelPair, u: UnitAction, star: Vec) -> dict:
    a, b = u.alpha, u.beta
    L, R = r.left, r.right
    return {
        "C1": b @ L - b @ R,
        "C2": L.T @ a - R @ b,
        "C3": L @ a - R @ a,
        "C4": L @ b - star * (b @ R).dot(b),
        "C5": star * (a @ L).dot(a) - R.T @ a,
    }


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError("Mode must be one of coherent/compatible, not '{}'".format(mode))


def check_action(p: OperadPresentation, u: UnitAction):
    if u.n != p.n:
        raise DimensionError("Action has {} coordinates but the operad has {} generators".format(u.n, p.n))
    if not u.is_normalized(p.star):
        raise NormalizationError("Unit actions need α(★) = β(★) = 1, got α(★) = {}, β(★) = {}".format(
            u.alpha.dot(p.star), u.beta.dot(p.star)))


def check(p: OperadPresentation, u: UnitAction, mode: str = "coherent") -> Verdict:
    _check_mode(mode)
    check_action(p, u)
    failures = []
    for i, r in enumerate(p.relations):
        for tag, res in residuals(r, u, p.star).items():
            if not res.is_zero():
                failures.append(Failure(i, tag, res))
    compatible = not any(f.tag in COMPATIBLE_TAGS for f in failures)
    coherent = compatible and not failures
    if mode == "compatible":
        failures = [f for f in failures if f.tag in COMPATIBLE_TAGS]
    return Verdict(mode, coherent, compatible, failures)
