import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pyOperadic.exactlin.matrices import Vec, Mat, rank, DimensionError
from pyOperadic.exactlin.subspace import (
    Subspace, AffineSet, INFEASIBLE, member, contains, intersection, annihilator, kernel, solve_affine,
)


def signed_pairing(d):
    half = d // 2
    return Mat(d, d, [(1 if i < half else -1) if i == j else 0 for i in range(d) for j in range(d)])


def random_subspace(rng, ambient, dim):
    vecs = [Vec([int(c) for c in rng.integers(-3, 4, size=ambient)]) for _ in range(dim)]
    return Subspace(ambient, vecs)


class TestSolveAffine:
    def test_unique(self):
        res = solve_affine(Mat.identity(2), Vec([1, 2]))
        assert res.particular == Vec([1, 2])
        assert res.homogeneous == Subspace.zero(2)

    def test_line(self):
        res = solve_affine(Mat.from_rows([[1, 1]]), Vec([1]))
        assert res.particular == Vec([1, 0])
        assert res.homogeneous == Subspace(2, [Vec([1, -1])])
        assert res.free == [1]
        assert res.point([5]) == Vec([-4, 5])

    def test_infeasible(self):
        assert solve_affine(Mat.from_rows([[1], [1]]), Vec([1, 2])) is INFEASIBLE
        assert not INFEASIBLE

    def test_empty_system(self):
        res = solve_affine(Mat.zeros(0, 3), Vec([]))
        assert isinstance(res, AffineSet)
        assert res.dim == 3

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            solve_affine(Mat.identity(2), Vec([1]))


class TestMembership:
    def test_examples(self):
        s = Subspace(2, [Vec([1, 0])])
        assert member(s, Vec([2, 0]))
        assert not member(s, Vec([0, 1]))
        assert member(Subspace.full(2), Vec([3, -7]))
        with pytest.raises(DimensionError):
            member(s, Vec([1, 0, 0]))

    def test_canonical_equality(self):
        a = Subspace(3, [Vec([1, 1, 0]), Vec([0, 1, 1])])
        b = Subspace(3, [Vec([1, 2, 1]), Vec([1, 0, -1]), Vec([2, 2, 0])])
        assert a == b
        assert a.dim == 2

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=0, max_size=4),
           st.lists(st.integers(-3, 3), min_size=4, max_size=4))
    def test_member_agrees_with_rank(self, rows, v):
        s = Subspace(4, [Vec(r) for r in rows])
        base = rank(Mat.from_rows(rows, 4)) if rows else 0
        grown = rank(Mat.from_rows(rows + [v], 4))
        assert member(s, Vec(v)) == (grown == base)

    def test_intersection(self):
        s = Subspace(3, [Vec([1, 0, 0]), Vec([0, 1, 0])])
        t = Subspace(3, [Vec([0, 1, 0]), Vec([0, 0, 1])])
        assert intersection(s, t) == Subspace(3, [Vec([0, 1, 0])])
        assert contains(s, intersection(s, t))
        assert intersection(s, Subspace.zero(3)) == Subspace.zero(3)

    def test_kernel(self):
        k = kernel(Mat.from_rows([[1, 1, 1]]))
        assert k.dim == 2
        assert all((Mat.from_rows([[1, 1, 1]]) @ v).is_zero() for v in k.vectors())


class TestAnnihilator:
    def test_trivial_cases(self):
        p = signed_pairing(4)
        assert annihilator(Subspace.zero(4), p) == Subspace.full(4)
        assert annihilator(Subspace.full(4), p) == Subspace.zero(4)

    def test_double_annihilator_random(self):
        rng = np.random.default_rng(2024)
        for ambient in (2, 8, 18):
            p = signed_pairing(ambient)
            for _ in range(5):
                s = random_subspace(rng, ambient, int(rng.integers(0, ambient + 1)))
                perp = annihilator(s, p)
                assert perp.dim == ambient - s.dim
                assert annihilator(perp, p.T) == s
