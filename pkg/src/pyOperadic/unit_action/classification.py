"""
Adapted bases and classification against the canonical relation spaces.
"""

from typing import Optional, Tuple

from pyOperadic.exactlin.matrices import Vec, Mat, rank
from pyOperadic.exactlin.subspace import INFEASIBLE, solve_affine, kernel, contains
from pyOperadic.operad.canonical import canonical_space
from pyOperadic.operad.presentation import OperadPresentation, change_basis, relation_subspace
from pyOperadic.unit_action.criterion import UnitAction, check
from pyOperadic.unit_action.solver import solve
from pyOperadic.utils.printing import logger

CLASSES = ("CoherentNeq", "CoherentEq", "CompatibleNeqOnly", "CompatibleEqOnly", "None")

_KIND = {
    "CoherentNeq": "coh_neq",
    "CoherentEq": "coh_eq",
    "CompatibleNeqOnly": "comp_neq",
    "CompatibleEqOnly": "comp_eq",
}


class ClassReport:
    def __init__(self, best: str, witness: UnitAction = None, basis: Mat = None, containment: bool = False):
        self.best = best
        self.witness = witness
        self.basis = basis
        self.containment = containment

    def __repr__(self):
        return "ClassReport(best={}, witness={}, containment={})".format(self.best, self.witness, self.containment)


def _particular(a: Mat, b: Vec) -> Vec:
    res = solve_affine(a, b)
    if res is INFEASIBLE:
        raise ValueError("Action is degenerate: no generator with the required values")
    return res.particular


def adapted_basis(p: OperadPresentation, u: UnitAction) -> Tuple[Mat, str]:
    """
    A basis op_1..op_n (the columns of t) with ★ = Σ op_i, α(op_i) = δ_1i and,
    when α ≠ β, β(op_i) = δ_2i.
    """
    n = p.n
    if not check(p, u, "compatible").compatible:
        raise ValueError("adapted_basis needs an action satisfying the compatibility criterion")
    if n == 1:
        return Mat.identity(1), "eq"
    star = p.star
    if u.symmetric:
        ker = kernel(Mat.from_rows([u.alpha], n)).vectors()
        op1 = star
        for w in ker:
            op1 = op1 - w
        return Mat.from_columns([op1] + ker, n), "eq"

    ab = Mat.from_rows([u.beta, u.alpha], n)
    op1 = _particular(ab, Vec([0, 1]))
    op2 = _particular(Mat.from_rows([u.alpha, u.beta], n), Vec([0, 1]))
    inter = kernel(ab).vectors()
    v = star - op1 - op2
    if n > 2 and v.is_zero():
        op1 = op1 + inter[0]
        v = v - inter[0]
    rest = []
    if n > 2:
        chosen = [v]
        for w in inter:
            if rank(Mat.from_rows(chosen + [w], n)) > len(chosen):
                chosen.append(w)
                rest.append(w)
        op3 = v
        for w in rest:
            op3 = op3 - w
        rest = [op3] + rest
    return Mat.from_columns([op1, op2] + rest, n), "neq"


def _certify(p: OperadPresentation, best: str, u: UnitAction) -> Optional[ClassReport]:
    t, case = adapted_basis(p, u)
    q = change_basis(p, t)
    kind = _KIND[best]
    ok = contains(canonical_space(kind, p.n), relation_subspace(q))
    logger("{}: witness {} in case {}, containment {}".format(best, u, case, ok))
    if ok:
        return ClassReport(best, u, t, True)
    return None


def classify(p: OperadPresentation) -> ClassReport:
    """The strongest class of p whose containment certificate succeeds."""
    n = p.n
    attempts = []
    if n >= 2:
        attempts.append(("CoherentNeq", lambda: solve(p, "coherent", alpha_equals_beta=False)))
    attempts.append(("CoherentEq", lambda: solve(p, "coherent", alpha_equals_beta=True)))
    if n >= 2:
        attempts.append(("CompatibleNeqOnly", lambda: solve(p, "compatible", alpha_equals_beta=False)))
    attempts.append(("CompatibleEqOnly", lambda: solve(p, "compatible", alpha_equals_beta=True)))

    for best, run in attempts:
        want_eq = best in ("CoherentEq", "CompatibleEqOnly")
        for u in run().witnesses():
            if u.symmetric != want_eq:
                continue
            report = _certify(p, best, u)
            if report is not None:
                return report
    return ClassReport("None")
