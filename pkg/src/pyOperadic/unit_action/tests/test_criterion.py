import numpy as np
import pytest

from pyOperadic.exactlin.matrices import Vec, Mat, DimensionError
from pyOperadic.operad.catalog import catalog
from pyOperadic.operad.presentation import OperadPresentation, RelPair, change_basis
from pyOperadic.operad.random_presentations import random_invertible
from pyOperadic.unit_action.criterion import UnitAction, NormalizationError, check

DEND_ACTION = UnitAction([1, 0], [0, 1])
TRI_ACTION = UnitAction([1, 0, 0], [0, 1, 0])
NS_ACTION = UnitAction([1, 0, 0], [0, 1, 0])


def failures_by_equation(verdict):
    return sorted((f.relation, f.tag) for f in verdict.failures)


class TestCheck:
    def test_dend_unique_action(self):
        v = check(catalog("dend"), DEND_ACTION, "coherent")
        assert v.coherent and v.compatible and v.holds
        assert v.failures == []

    def test_tri_and_ns(self):
        assert check(catalog("tri"), TRI_ACTION).coherent
        assert check(catalog("ns"), NS_ACTION).coherent

    def test_twoassoc_all_ones(self):
        ones = UnitAction([1, 1], [1, 1])
        v = check(catalog("twoassoc"), ones, "coherent")
        assert v.compatible
        assert not v.coherent
        assert (1, "C4") in failures_by_equation(v)
        assert all(f.tag in ("C4", "C5") for f in v.failures)
        c4 = [f for f in v.failures if f.tag == "C4"]
        assert c4[0].residual == Vec([-1, 1])

        other = check(catalog("twoassoc", star="·"), ones, "coherent")
        assert other.compatible and not other.coherent
        assert (0, "C4") in failures_by_equation(other)

    def test_compatible_mode_reports_only_linear_equations(self):
        v = check(catalog("twoassoc"), UnitAction([1, 1], [1, 1]), "compatible")
        assert v.holds
        assert v.failures == []
        assert not v.coherent

    def test_wrong_dend_action(self):
        v = check(catalog("dend"), UnitAction([1, 0], [1, 0]), "coherent")
        assert not v.compatible and not v.coherent
        assert (0, "C1") in failures_by_equation(v)

    def test_input_errors(self):
        with pytest.raises(NormalizationError):
            check(catalog("dend"), UnitAction([1, 1], [0, 1]))
        with pytest.raises(DimensionError):
            check(catalog("dend"), UnitAction([1, 0, 0], [0, 1, 0]))
        with pytest.raises(ValueError):
            check(catalog("dend"), DEND_ACTION, "strong")


class TestCriterionProperties:
    @pytest.mark.parametrize("name,action", [("dend", DEND_ACTION), ("tri", TRI_ACTION), ("ns", NS_ACTION),
                                             ("twoassoc", UnitAction([1, 1], [1, 1]))])
    def test_independent_of_relation_basis(self, name, action):
        rng = np.random.default_rng(11)
        p = catalog(name)
        mix = random_invertible(rng, len(p.relations))
        flat = Mat.from_rows([r.flatten() for r in p.relations])
        mixed = OperadPresentation(p.name, p.gens,
                                   [RelPair.from_flat(v, p.n) for v in (mix @ flat).row_list()], p.star)
        for mode in ("coherent", "compatible"):
            a, b = check(p, action, mode), check(mixed, action, mode)
            assert (a.coherent, a.compatible) == (b.coherent, b.compatible)

    @pytest.mark.parametrize("seed", range(5))
    def test_isomorphism_transport(self, seed):
        rng = np.random.default_rng(seed)
        for name, action in [("tri", TRI_ACTION), ("twoassoc", UnitAction([1, 1], [1, 1])),
                             ("dend", UnitAction([2, -1], [1, 0]))]:
            p = catalog(name)
            t = random_invertible(rng, p.n)
            q = change_basis(p, t)
            moved = action.transported(t)
            assert moved.is_normalized(q.star)
            a, b = check(p, action), check(q, moved)
            assert failures_by_equation(a) == failures_by_equation(b)
            assert (a.coherent, a.compatible) == (b.coherent, b.compatible)
