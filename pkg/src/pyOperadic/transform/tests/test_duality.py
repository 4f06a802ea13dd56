import numpy as np
import pytest

from pyOperadic.exactlin.matrices import Vec
from pyOperadic.exactlin.scalars import Scalar
from pyOperadic.operad.catalog import catalog, NAMES
from pyOperadic.operad.presentation import PresentationError, change_basis, relation_subspace
from pyOperadic.operad.random_presentations import random_presentation
from pyOperadic.transform.associative import ALL_T, check_associative, find_associative_on_line
from pyOperadic.transform.duality import dual, dual_label, signed_pairing
from pyOperadic.unit_action.classification import adapted_basis
from pyOperadic.unit_action.criterion import UnitAction
from pyOperadic.unit_action.solver import solve


class TestDual:
    def test_dend_dual_is_associative_dialgebra(self):
        d = dual(catalog("dend"))
        assert d.gens == ("!≺", "!≻")
        assert d.subspace == relation_subspace(catalog("assocdialg"))
        assert d.candidates == [Vec([1, 0]), Vec([0, 1])]
        for x in d.candidates:
            assert check_associative(d, x)
            assert solve(d.with_star(x), "compatible").is_empty

    def test_assoc_self_dual(self):
        d = dual(catalog("assoc"))
        assert d.subspace == relation_subspace(catalog("assoc"))
        assert d.candidates == [Vec([1])]

    @pytest.mark.parametrize("name", NAMES)
    def test_dimension_and_double_dual(self, name):
        p = catalog(name)
        d = dual(p)
        assert d.subspace.dim == p.ambient_dim - relation_subspace(p).dim
        dd = dual(d)
        assert dd.gens == p.gens
        assert dd.subspace == relation_subspace(p)

    @pytest.mark.parametrize("seed", range(20))
    def test_double_dual_random(self, seed):
        rng = np.random.default_rng(seed)
        p = random_presentation(rng, int(rng.integers(2, 5)))
        assert dual(dual(p)).subspace == relation_subspace(p)

    def test_pairing_signature(self):
        m = signed_pairing(2)
        assert m.shape == (8, 8)
        assert [m[i, i] for i in range(8)] == [1] * 4 + [-1] * 4

    def test_labels(self):
        assert dual_label("≺") == "!≺"
        assert dual_label(dual_label("≺")) == "≺"

    def test_with_star_validates(self):
        d = dual(catalog("dend"))
        with pytest.raises(PresentationError):
            d.with_star(Vec([1, 1]))
        with pytest.raises(PresentationError):
            d.with_star(Vec([1, 0, 0]))

    @pytest.mark.parametrize("name,action", [("dend", UnitAction([1, 0], [0, 1])),
                                             ("tri", UnitAction([1, 0, 0], [0, 1, 0])),
                                             ("ns", UnitAction([1, 0, 0], [0, 1, 0]))])
    def test_duals_lose_unit_actions(self, name, action):
        p = catalog(name)
        t, case = adapted_basis(p, action)
        assert case == "neq"
        q = change_basis(p, t)
        d = dual(q)
        assert d.candidates == [Vec.unit(p.n, i) for i in range(p.n)]
        for x in d.candidates:
            assert solve(d.with_star(x), "compatible").is_empty

    def test_twoassoc_dual(self):
        d = dual(catalog("twoassoc"))
        assert d.candidates == [Vec([1, 0]), Vec([0, 1])]
        for x in d.candidates:
            assert solve(d.with_star(x), "compatible").is_empty


class TestAssociative:
    def test_check_associative(self):
        assert check_associative(catalog("dend"), Vec([1, 1]))
        assert not check_associative(catalog("dend"), Vec([1, 0]))
        p = catalog("assocdialg")
        assert check_associative(p, Vec([1, 0]))
        assert check_associative(p, Vec([0, 1]))

    def test_line_through_star(self):
        assert find_associative_on_line(catalog("dend"), Vec([0, 0]), Vec([1, 1])) is ALL_T

    def test_line_between_dialgebra_operations(self):
        roots = find_associative_on_line(catalog("assocdialg"), Vec([1, 0]), Vec([-1, 1]))
        assert roots == [Scalar(0), Scalar(1)]

    def test_line_through_star_only(self):
        # x = (1, t) is associative only at ★
        roots = find_associative_on_line(catalog("dend"), Vec([1, 0]), Vec([0, 1]))
        assert roots == [Scalar(1)]

    def test_zero_direction(self):
        with pytest.raises(ValueError):
            find_associative_on_line(catalog("dend"), Vec([1, 0]), Vec([0, 0]))

