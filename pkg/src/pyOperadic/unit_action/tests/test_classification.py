import numpy as np
import pytest

from pyOperadic.exactlin.matrices import Vec, Mat, inverse
from pyOperadic.exactlin.subspace import contains
from pyOperadic.operad.canonical import canonical_space
from pyOperadic.operad.catalog import catalog
from pyOperadic.operad.presentation import change_basis, relation_subspace
from pyOperadic.operad.random_presentations import random_canonical_presentation
from pyOperadic.unit_action.classification import adapted_basis, classify
from pyOperadic.unit_action.criterion import UnitAction, check
from pyOperadic.unit_action.solver import solve


class TestClassifyCatalog:
    def test_dend(self):
        report = classify(catalog("dend"))
        assert report.best == "CoherentNeq"
        assert report.containment
        assert report.witness == UnitAction([1, 0], [0, 1])
        assert report.basis == Mat.identity(2)

    @pytest.mark.parametrize("name", ["tri", "ns"])
    def test_three_generators(self, name):
        p = catalog(name)
        report = classify(p)
        assert report.best == "CoherentNeq"
        assert report.containment
        moved = change_basis(p, report.basis)
        assert contains(canonical_space("coh_neq", 3), relation_subspace(moved))

    @pytest.mark.parametrize("star", ["⊣", "⊢"])
    def test_assocdialg(self, star):
        assert classify(catalog("assocdialg", star=star)).best == "None"

    def test_assoc(self):
        report = classify(catalog("assoc"))
        assert report.best == "CoherentEq"
        assert report.witness == UnitAction([1], [1])

    def test_twoassoc(self):
        report = classify(catalog("twoassoc"))
        assert report.best == "CoherentEq"
        assert report.witness == UnitAction([1, 0], [1, 0])


class TestAdaptedBasis:
    def test_identity_for_dend_and_tri(self):
        t, case = adapted_basis(catalog("dend"), UnitAction([1, 0], [0, 1]))
        assert case == "neq"
        assert t == Mat.identity(2)
        t, case = adapted_basis(catalog("tri"), UnitAction([1, 0, 0], [0, 1, 0]))
        assert case == "neq"
        assert t == Mat.identity(3)

    def test_symmetric_action(self):
        rng = np.random.default_rng(3)
        p = random_canonical_presentation(rng, "coh_eq", 3)
        u = UnitAction([1, 0, 0], [1, 0, 0])
        t, case = adapted_basis(p, u)
        assert case == "eq"
        assert t.T @ u.alpha == Vec([1, 0, 0])
        assert inverse(t) @ p.star == Vec([1, 1, 1])

    def test_rejects_incompatible_action(self):
        with pytest.raises(ValueError):
            adapted_basis(catalog("dend"), UnitAction([1, 0], [1, 0]))


class TestClassificationRoundTrip:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_coherent_neq_subspaces(self, n):
        rng = np.random.default_rng(900 + n)
        for _ in range(25):
            p = random_canonical_presentation(rng, "coh_neq", n)
            report = classify(p)
            assert report.best == "CoherentNeq", p
            assert report.containment

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_coherent_eq_subspaces(self, n):
        rng = np.random.default_rng(950 + n)
        eq = canonical_space("coh_eq", n)
        dims = set()
        for _ in range(25):
            p = random_canonical_presentation(rng, "coh_eq", n, rebase=True)
            dims.add(len(p.relations))
            report = classify(p)
            # a proper subspace may also admit α ≠ β, which ranks first
            assert report.best in ("CoherentEq", "CoherentNeq"), p
            assert report.containment

            found = [u for u in solve(p, "coherent", alpha_equals_beta=True).witnesses()
                     if check(p, u, "coherent").coherent]
            assert found, p
            t, case = adapted_basis(p, found[0])
            assert case == "eq"
            assert contains(eq, relation_subspace(change_basis(p, t)))
        assert len(dims) > 1
