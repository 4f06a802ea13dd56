import pytest

from pyOperadic.operad.catalog import catalog, NAMES
from pyOperadic.operad.presentation import opposite
from pyOperadic.freealg.oracle import GRID_SAMPLE, action_grid, oracle, oracle_grid, undefined_instances
from pyOperadic.unit_action.criterion import UnitAction, NormalizationError, check

DEND_ACTION = UnitAction([1, 0], [0, 1])


def _reversed_instance(instance):
    i, a, b = instance
    return i, None if a is None else a[::-1], b[::-1]


class TestOracle:
    @pytest.mark.parametrize("mode", ["coherent", "compatible"])
    def test_dend_action(self, mode):
        res = oracle(catalog("dend"), DEND_ACTION, mode)
        assert res.holds
        assert res.counterexample is None
        assert res.evaluated > 0

    def test_twoassoc_all_ones(self):
        p = catalog("twoassoc")
        ones = UnitAction([1, 1], [1, 1])
        assert oracle(p, ones, "compatible").holds
        res = oracle(p, ones, "coherent")
        assert not res.holds
        assert res.counterexample.relation_index == 1
        assert res.counterexample.lhs != res.counterexample.rhs

    def test_wrong_dend_action(self):
        wrong = UnitAction([1, 0], [1, 0])
        assert not oracle(catalog("dend"), wrong, "coherent").holds
        res = oracle(catalog("dend"), wrong, "compatible")
        assert not res.holds
        assert res.counterexample.a_triple is None
        assert res.counterexample.relation_index == 0

    def test_undefined_instances_skipped(self):
        res = oracle(catalog("dend"), DEND_ACTION, "coherent")
        assert res.skipped > 0
        assert res.evaluated + res.skipped == 3 * 8 * 7

    @pytest.mark.parametrize("name", NAMES)
    @pytest.mark.parametrize("mode", ["coherent", "compatible"])
    def test_skips_match_opposite(self, name, mode):
        p = catalog(name)
        u = action_grid(p)[0]
        skipped = undefined_instances(p, u, mode)
        mirrored = undefined_instances(opposite(p), u.opposite(), mode)
        assert sorted(map(_reversed_instance, skipped)) == sorted(mirrored)
        res = oracle(p, u, mode)
        if res.holds:
            assert res.skipped == len(skipped)

    def test_dend_skips_are_one_sided_units(self):
        skipped = undefined_instances(catalog("dend"), DEND_ACTION, "coherent")
        assert skipped
        for _, a, b in skipped:
            assert a[:2] == ("1", "1") and b[:2] == ("1", "1") or a[1:] == ("1", "1") and b[1:] == ("1", "1")
        assert not undefined_instances(catalog("dend"), DEND_ACTION, "compatible")

    @pytest.mark.parametrize("name", ["dend", "tri", "twoassoc"])
    def test_opposite_verdicts(self, name):
        p = catalog(name)
        q = opposite(p)
        for u in action_grid(p)[:6]:
            for mode in ("coherent", "compatible"):
                assert oracle(p, u, mode).holds == oracle(q, u.opposite(), mode).holds
                assert check(p, u, mode).holds == check(q, u.opposite(), mode).holds

    def test_rejects_unnormalized(self):
        with pytest.raises(NormalizationError):
            oracle(catalog("dend"), UnitAction([1, 1], [0, 1]))


class TestOracleGrid:
    def test_grid_sizes(self):
        assert len(action_grid(catalog("dend"))) == 9
        assert len(action_grid(catalog("tri"))) == 81
        assert len(action_grid(catalog("twoassoc"))) == 16
        assert all(u.is_normalized(catalog("ns").star) for u in action_grid(catalog("ns")))

    def test_subsample_is_deterministic(self):
        p = catalog("tri")
        a = action_grid(p, sample=20, seed=4)
        assert len(a) == 20
        assert a == action_grid(p, sample=20, seed=4)
        assert set(a) <= set(action_grid(p, sample=None))

    @pytest.mark.parametrize("mode", ["coherent", "compatible"])
    @pytest.mark.parametrize("name", NAMES)
    def test_oracle_matches_criterion(self, name, mode):
        p = catalog(name)
        assert oracle_grid(p, mode, sample=GRID_SAMPLE, seed=0) == []

    @pytest.mark.parametrize("name,star", [("twoassoc", "·"), ("assocdialg", "⊢")])
    def test_other_star_choices(self, name, star):
        p = catalog(name, star=star)
        for mode in ("coherent", "compatible"):
            assert oracle_grid(p, mode) == []

    def test_grid_contains_verdicts_of_both_kinds(self):
        p = catalog("dend")
        verdicts = {check(p, u).holds for u in action_grid(p)}
        assert verdicts == {True, False}
