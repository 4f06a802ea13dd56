"""
Presentations (G, R, ★) of binary quadratic regular operads with a splitting
of associativity.

A relation is a pair (L, R) of n x n coefficient matrices standing for

    Σ L[s,t] (x e_s y) e_t z  =  Σ R[s,t] x e_s (y e_t z).

Flattened into G⊗² ⊕ G⊗², the coordinate of (slot, s, t) is slot·n² + s·n + t
with slot 0 for the left side and 1 for the right side. Every module uses this
ordering.
"""

from typing import List, Sequence

from pyOperadic.exactlin.matrices import Vec, Mat, inverse, DimensionError
from pyOperadic.exactlin.subspace import Subspace, member


class PresentationError(ValueError):
    pass


class RelPair:
    """One element of G⊗² ⊕ G⊗²."""

    __slots__ = ("left", "right")

    def __init__(self, left: Mat, right: Mat):
        if left.rows != left.cols or right.shape != left.shape:
            raise DimensionError("Relation sides must be square of equal size, got {} and {}".format(
                left.shape, right.shape))
        self.left = left
        self.right = right

    @property
    def n(self) -> int:
        return self.left.rows

    @classmethod
    def from_flat(cls, v: Vec, n: int) -> "RelPair":
        if v.dim != 2 * n * n:
            raise DimensionError("Expected a vector of length {}, got {}".format(2 * n * n, v.dim))
        return cls(Mat(n, n, v.entries[:n * n]), Mat(n, n, v.entries[n * n:]))

    @classmethod
    def associator(cls, u: Vec) -> "RelPair":
        """(u⊗u, u⊗u), the associativity relation of the operation u."""
        uu = Mat.outer(u, u)
        return cls(uu, uu)

    def flatten(self) -> Vec:
        return Vec(self.left.entries + self.right.entries)

    def transform(self, f: Mat) -> "RelPair":
        """Image under the slot-wise action of a linear map f on generators."""
        return RelPair(f @ self.left @ f.T, f @ self.right @ f.T)

    def is_zero(self) -> bool:
        return self.left.is_zero() and self.right.is_zero()

    def __add__(self, other):
        return RelPair(self.left + other.left, self.right + other.right)

    def __mul__(self, c):
        return RelPair(self.left * c, self.right * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RelPair):
            return NotImplemented
        return self.left == other.left and self.right == other.right

    def __hash__(self):
        return hash((self.left, self.right))

    def __repr__(self):
        return "RelPair(left={!r}, right={!r})".format(self.left, self.right)


class OperadPresentation:
    """
    An immutable presentation: generator labels, a basis of the relation space
    and the coordinates of the distinguished associative operation ★.
    """

    def __init__(self, name: str, gens: Sequence[str], relations: Sequence[RelPair], star: Vec):
        gens = tuple(gens)
        if len(gens) == 0:
            raise PresentationError("A presentation needs at least one generator")
        if len(set(gens)) != len(gens):
            raise PresentationError("Generator labels must be unique: {}".format(list(gens)))
        if any(not isinstance(g, str) or g == "" for g in gens):
            raise PresentationError("Generator labels must be nonempty strings")
        star = star if isinstance(star, Vec) else Vec(star)
        n = len(gens)
        if star.dim != n:
            raise PresentationError("Star has {} coordinates for {} generators".format(star.dim, n))
        for i, r in enumerate(relations):
            if r.n != n:
                raise PresentationError("Relation {} is {}x{} but there are {} generators".format(i, r.n, r.n, n))
        self._name = name
        self._gens = gens
        self._relations = tuple(relations)
        self._star = star
        self._subspace = None

    @property
    def name(self) -> str:
        return self._name

    @property
    def gens(self):
        return self._gens

    @property
    def n(self) -> int:
        return len(self._gens)

    @property
    def relations(self):
        return self._relations

    @property
    def star(self) -> Vec:
        return self._star

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n * self.n

    def index(self, label: str) -> int:
        try:
            return self._gens.index(label)
        except ValueError:
            raise PresentationError("Unknown generator label '{}'".format(label))

    def with_star(self, star: Vec) -> "OperadPresentation":
        return OperadPresentation(self._name, self._gens, self._relations, star)

    def __eq__(self, other):
        if not isinstance(other, OperadPresentation):
            return NotImplemented
        return (self._name, self._gens, self._relations, self._star) == \
            (other._name, other._gens, other._relations, other._star)

    def __hash__(self):
        return hash((self._name, self._gens, self._relations, self._star))

    def __repr__(self):
        return "OperadPresentation(name={!r}, gens={}, relations={}, star={})".format(
            self._name, list(self._gens), len(self._relations), self._star)


def relation_subspace(p: OperadPresentation) -> Subspace:
    if p._subspace is None:
        p._subspace = Subspace(p.ambient_dim, [r.flatten() for r in p.relations])
    return p._subspace


def validate(p: OperadPresentation) -> List[str]:
    """All violations of the presentation invariants; an empty list means valid."""
    violations = []
    span = relation_subspace(p)
    if span.dim != len(p.relations):
        violations.append("relations are linearly dependent: {} listed, span has dimension {}".format(
            len(p.relations), span.dim))
    if p.star.is_zero():
        violations.append("star is the zero operation")
    if not member(span, RelPair.associator(p.star).flatten()):
        violations.append("(star⊗star, star⊗star) is not in the span of the relations")
    return violations


def require_valid(p: OperadPresentation) -> OperadPresentation:
    violations = validate(p)
    if violations:
        raise PresentationError("Invalid presentation '{}': {}".format(p.name, "; ".join(violations)))
    return p


def change_basis(p: OperadPresentation, t: Mat) -> OperadPresentation:
    """
    Re-express p in the basis whose i-th element is column i of t (in old
    coordinates). Relations transform as t⁻¹·M·t⁻ᵀ and ★ as t⁻¹·★.
    """
    if t.shape != (p.n, p.n):
        raise DimensionError("Change of basis must be {0}x{0}, got {1}x{2}".format(p.n, t.rows, t.cols))
    ti = inverse(t)
    relations = [r.transform(ti) for r in p.relations]
    return OperadPresentation(p.name, p.gens, relations, ti @ p.star)


def opposite(p: OperadPresentation) -> OperadPresentation:
    """
    The operad with every operation read right to left, x e_s^op y = y e_s x.
    (x e_s y) e_t z turns into z e_t^op (y e_s^op x), so (L, R) becomes (Rᵀ, Lᵀ).
    """
    relations = [RelPair(r.right.T, r.left.T) for r in p.relations]
    return OperadPresentation(p.name + "ᵒᵖ", p.gens, relations, p.star)


def transport_functional(v: Vec, t: Mat) -> Vec:
    """A functional on G in the coordinates of the basis given by the columns of t."""
    return t.T @ v


class OperadMorphism:
    """A linear map on generators; column j is the image of source generator j."""

    def __init__(self, matrix: Mat):
        self.matrix = matrix

    def __call__(self, v: Vec) -> Vec:
        return self.matrix @ v

    def on_relation(self, r: RelPair) -> RelPair:
        return r.transform(self.matrix)


def is_morphism(f: OperadMorphism, p: OperadPresentation, q: OperadPresentation) -> bool:
    """True iff f sends ★ to ★' and maps the relations of p into those of q."""
    if f.matrix.shape != (q.n, p.n):
        raise DimensionError("Morphism must be {}x{}, got {}x{}".format(q.n, p.n, *f.matrix.shape))
    if f(p.star) != q.star:
        return False
    target = relation_subspace(q)
    return all(member(target, f.on_relation(r).flatten()) for r in p.relations)
