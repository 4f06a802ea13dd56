"""
Subspaces of k^d in canonical form, and exact affine solving.

A Subspace stores the nonzero rows of the reduced row-echelon form of any
spanning set, so two subspaces are equal exactly when their stored matrices
are equal.
"""

from typing import List

from pyOperadic.exactlin.matrices import Vec, Mat, DimensionError, rref, vstack
from pyOperadic.exactlin.scalars import ZERO, ONE


class Subspace:
    """
    A subspace of the coordinate space of dimension ambient_dim.
    """

    __slots__ = ("_ambient", "_basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors=()):
        vectors = [v if isinstance(v, Vec) else Vec(v) for v in vectors]
        for v in vectors:
            if v.dim != ambient_dim:
                raise DimensionError("Vector of length {} in ambient space of dimension {}".format(
                    v.dim, ambient_dim))
        self._ambient = ambient_dim
        if len(vectors) == 0:
            self._basis = Mat.zeros(0, ambient_dim)
            self._pivots = ()
            return
        red, pivots = rref(Mat.from_rows(vectors, ambient_dim))
        self._basis = Mat.from_rows(red.row_list()[:len(pivots)], ambient_dim)
        self._pivots = tuple(pivots)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, [Vec.unit(ambient_dim, i) for i in range(ambient_dim)])

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @property
    def ambient_dim(self) -> int:
        return self._ambient

    @property
    def basis(self) -> Mat:
        return self._basis

    @property
    def pivots(self) -> tuple:
        return self._pivots

    @property
    def dim(self) -> int:
        return len(self._pivots)

    def vectors(self) -> List[Vec]:
        return self._basis.row_list()

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._ambient == other._ambient and self._basis == other._basis

    def __hash__(self):
        return hash(("Subspace", self._ambient, self._basis))

    def __repr__(self):
        return "Subspace(ambient={}, dim={})".format(self._ambient, self.dim)

    def __str__(self):
        return "Subspace of dim {} in k^{}: {}".format(self.dim, self._ambient, self._basis)

    def reduce(self, v: Vec) -> Vec:
        """Remainder of v after clearing the pivot coordinates with the basis rows."""
        if v.dim != self._ambient:
            raise DimensionError("Vector of length {} in ambient space of dimension {}".format(
                v.dim, self._ambient))
        for row, p in zip(self._basis.row_list(), self._pivots):
            if v[p] != 0:
                v = v - row * v[p]
        return v

    def free_columns(self) -> List[int]:
        pivots = set(self._pivots)
        return [c for c in range(self._ambient) if c not in pivots]

    def sum(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace(self._ambient, self.vectors() + other.vectors())

    def __add__(self, other):
        return self.sum(other)


def _check_ambient(s: Subspace, t: Subspace):
    if s.ambient_dim != t.ambient_dim:
        raise DimensionError("Ambient dimensions differ: {} vs {}".format(s.ambient_dim, t.ambient_dim))


def member(s: Subspace, v: Vec) -> bool:
    return s.reduce(v).is_zero()


def contains(s: Subspace, t: Subspace) -> bool:
    """True iff t is a subspace of s."""
    _check_ambient(s, t)
    return all(member(s, v) for v in t.vectors())


def _kernel_vectors(red: Mat, pivots: List[int], cols: int):
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * cols
        x[f] = ONE
        for r, p in enumerate(pivots):
            x[p] = -red[r, f]
        basis.append(Vec(x))
    return basis, free


def kernel(m: Mat) -> Subspace:
    """Right kernel {x : m x = 0}."""
    red, pivots = rref(m)
    return Subspace(m.cols, _kernel_vectors(red, pivots, m.cols)[0])


def intersection(s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(s, t)
    d = s.ambient_dim
    if s.dim == 0 or t.dim == 0:
        return Subspace.zero(d)
    # a·S = b·T  <=>  (a, -b) in the left kernel of [S; T]
    stacked = vstack([s.basis, -t.basis], d)
    coeffs = kernel(stacked.T)
    return Subspace(d, [Vec(c.entries[:s.dim]) @ s.basis for c in coeffs.vectors()])


def annihilator(s: Subspace, pairing: Mat) -> Subspace:
    """{w : v·pairing·w = 0 for all v in s}."""
    if pairing.rows != s.ambient_dim or pairing.cols != s.ambient_dim:
        raise DimensionError("Pairing must be {0}x{0}, got {1}x{2}".format(
            s.ambient_dim, pairing.rows, pairing.cols))
    if s.dim == 0:
        return Subspace.full(s.ambient_dim)
    return kernel(s.basis @ pairing)


class _Infeasible:
    """Sentinel returned by solve_affine when a·x = b has no solution."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Infeasible"

    def __bool__(self):
        return False


INFEASIBLE = _Infeasible()


class AffineSet:
    """
    particular + span(directions), the full solution set of a linear system.

    Direction i has a one in coordinate free[i] and zeros in the other free
    coordinates, and the particular solution vanishes on all of them, so the
    parameters of point() are exactly the free coordinates of the solution.
    """

    __slots__ = ("particular", "directions", "free")

    def __init__(self, particular: Vec, directions: List[Vec], free: List[int]):
        self.particular = particular
        self.directions = list(directions)
        self.free = list(free)

    @property
    def homogeneous(self) -> Subspace:
        return Subspace(self.particular.dim, self.directions)

    @property
    def dim(self) -> int:
        return len(self.directions)

    def point(self, params) -> Vec:
        x = self.particular
        for c, d in zip(params, self.directions):
            if c != 0:
                x = x + d * c
        return x

    def __eq__(self, other):
        if not isinstance(other, AffineSet):
            return NotImplemented
        return self.particular == other.particular and self.homogeneous == other.homogeneous

    def __repr__(self):
        return "AffineSet(particular={}, dim={})".format(self.particular, self.dim)


def solve_affine(a: Mat, b: Vec):
    """
    Solve a·x = b exactly. Returns an AffineSet whose particular solution has
    all free coordinates zero, or INFEASIBLE.
    """
    if a.rows != b.dim:
        raise DimensionError("System has {} rows but right-hand side has length {}".format(a.rows, b.dim))
    n = a.cols
    if a.rows == 0:
        return AffineSet(Vec.zeros(n), [Vec.unit(n, i) for i in range(n)], list(range(n)))
    aug = Mat.from_rows([list(a.row(i)) + [b[i]] for i in range(a.rows)], n + 1)
    red, pivots = rref(aug)
    if n in pivots:
        return INFEASIBLE
    x = [ZERO] * n
    for r, p in enumerate(pivots):
        x[p] = red[r, n]
    directions, free = _kernel_vectors(red, pivots, n)
    return AffineSet(Vec(x), directions, free)
