import unittest

from pyOperadic.operad.catalog import catalog, NAMES
from pyOperadic.operad.presentation import relation_subspace
from pyOperadic.freealg.truncated import (
    UnitizedElement, UndefinedProduct, TruncationExceeded, truncated_free, dim_deg3, mul_free, STAR,
)
from pyOperadic.freealg.box import BoxElement, mul_box
from pyOperadic.unit_action.criterion import UnitAction

DEND = catalog("dend")
DEND_ACTION = UnitAction([1, 0], [0, 1])
x = UnitizedElement.x()
one = UnitizedElement.one()


def planar_trees(leaves, binary=True):
    """Number of planar rooted trees with the given leaves, internal vertices of arity >= 2."""
    if leaves == 1:
        return 1

    def split(m, parts):
        if parts == 1:
            return planar_trees(m, binary)
        return sum(planar_trees(k, binary) * split(m - k, parts - 1) for k in range(1, m - parts + 2))

    arities = [2] if binary else range(2, leaves + 1)
    return sum(split(leaves, k) for k in arities)


class TestTruncatedFree(unittest.TestCase):
    def test_tree_counts(self):
        self.assertEqual(planar_trees(4), 5)
        self.assertEqual(planar_trees(4, binary=False), 11)
        self.assertEqual(dim_deg3(DEND), planar_trees(4))
        self.assertEqual(dim_deg3(catalog("tri")), planar_trees(4, binary=False))
        self.assertEqual(dim_deg3(catalog("assoc")), 1)

    def test_dimension_identity(self):
        for name in NAMES:
            p = catalog(name)
            self.assertEqual(dim_deg3(truncated_free(p)), p.ambient_dim - relation_subspace(p).dim)

    def test_degree_two(self):
        f = truncated_free(DEND)
        self.assertEqual(mul_free(f, x, "≺", x), UnitizedElement({("g", 0): 1}))
        self.assertEqual(mul_free(f, x, STAR, x), UnitizedElement({("g", 0): 1, ("g", 1): 1}))

    def test_first_dendriform_relation(self):
        f = truncated_free(DEND)
        xx_left, xx_right = mul_free(f, x, 0, x), mul_free(f, x, 1, x)
        lhs = mul_free(f, xx_left, 0, x)
        rhs = mul_free(f, x, 0, xx_left) + mul_free(f, x, 0, xx_right)
        self.assertFalse(lhs.is_zero())
        self.assertEqual(lhs, rhs)

    def test_relations_vanish(self):
        for name in NAMES:
            p = catalog(name)
            f = truncated_free(p)
            xx = [mul_free(f, x, s, x) for s in range(p.n)]
            for r in p.relations:
                total = UnitizedElement()
                for s in range(p.n):
                    for t in range(p.n):
                        total = total + mul_free(f, xx[s], t, x) * r.left[s, t]
                        total = total - mul_free(f, x, s, xx[t]) * r.right[s, t]
                self.assertTrue(total.is_zero(), name)

    def test_unit_rules(self):
        f = truncated_free(DEND)
        self.assertEqual(mul_free(f, x, "≺", one, DEND_ACTION), x)
        self.assertTrue(mul_free(f, one, "≺", x, DEND_ACTION).is_zero())
        self.assertEqual(mul_free(f, one, "≻", x, DEND_ACTION), x)
        self.assertEqual(mul_free(f, one, STAR, one, DEND_ACTION), one)
        with self.assertRaises(UndefinedProduct):
            mul_free(f, one, "≺", one, DEND_ACTION)
        with self.assertRaises(ValueError):
            mul_free(f, one, "≺", x)

    def test_truncation(self):
        f = truncated_free(DEND)
        xx = mul_free(f, x, 0, x)
        with self.assertRaises(TruncationExceeded):
            mul_free(f, xx, 0, xx)
        with self.assertRaises(TruncationExceeded):
            mul_free(f, mul_free(f, xx, 0, x), 1, x)


class TestBoxProduct(unittest.TestCase):
    def setUp(self):
        self.f = truncated_free(DEND)

    def test_two_units_on_the_right(self):
        e = BoxElement.basis("x", "1")
        self.assertEqual(mul_box(self.f, e, 0, e, DEND_ACTION), BoxElement({(("g", 0), "1"): 1}))

    def test_two_units_on_the_left(self):
        e = BoxElement.basis("1", "x")
        self.assertEqual(mul_box(self.f, e, 0, e, DEND_ACTION), BoxElement({("1", ("g", 0)): 1}))

    def test_unit_right_in_second_slot(self):
        lhs = mul_box(self.f, BoxElement.basis("x", "x"), 0, BoxElement.basis("x", "1"), DEND_ACTION)
        self.assertEqual(lhs, BoxElement({(("g", 0), "x"): 1, (("g", 1), "x"): 1}))
        rhs = mul_box(self.f, BoxElement.basis("x", "x"), 1, BoxElement.basis("x", "1"), DEND_ACTION)
        self.assertTrue(rhs.is_zero())

    def test_undefined_propagates(self):
        e = BoxElement.basis("1", "1")
        with self.assertRaises(UndefinedProduct):
            mul_box(self.f, e, 0, e, DEND_ACTION)
        self.assertEqual(mul_box(self.f, e, STAR, e, DEND_ACTION), e)


if __name__ == "__main__":
    unittest.main()
