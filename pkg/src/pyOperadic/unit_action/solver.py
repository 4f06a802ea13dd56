"""
Exact solver for compatible and coherent unit actions on a fixed ★.
"""

import itertools
from functools import reduce
from typing import List, Optional

import sympy

from pyOperadic.exactlin.matrices import Vec, Mat
from pyOperadic.exactlin.scalars import ZERO, ONE, to_sympy, from_sympy
from pyOperadic.exactlin.subspace import Subspace, AffineSet, INFEASIBLE, solve_affine
from pyOperadic.operad.presentation import OperadPresentation
from pyOperadic.unit_action.criterion import UnitAction, check, _check_mode
from pyOperadic.utils.printing import logger

# largest number of probe points tried on an unresolved family
PROBE_LIMIT = 729

EMPTY, POINTS, FAMILY = "Empty", "Points", "Family"


class ActionSolutionSet:
    """
    Empty, a finite list of Points, or a Family particular + span(directions).

    A Family with no residual constraints consists entirely of solutions. When
    residual constraints remain, samples holds the probed points that were
    verified exactly.
    """

    def __init__(self, status: str, points: List[UnitAction] = (), particular: UnitAction = None,
                 directions: Subspace = None, residual_constraints: List[str] = (),
                 samples: List[UnitAction] = (), affine: AffineSet = None):
        self.status = status
        self.points = list(points)
        self.particular = particular
        self.directions = directions
        self.residual_constraints = list(residual_constraints)
        self.samples = list(samples)
        self.affine = affine

    @property
    def is_empty(self) -> bool:
        return self.status == EMPTY

    @property
    def dim(self) -> Optional[int]:
        return self.directions.dim if self.directions is not None else None

    def witnesses(self) -> List[UnitAction]:
        """Actions known to satisfy the solved equations."""
        if self.status == POINTS:
            return list(self.points)
        if self.status != FAMILY:
            return []
        found = list(self.samples)
        if not self.residual_constraints:
            found.append(self.particular)
            for d in self.affine.directions:
                for c in (ONE, -ONE):
                    found.append(UnitAction.from_vector(self.particular.as_vector() + d * c))
        return _unique(found)

    def __repr__(self):
        if self.status == POINTS:
            return "ActionSolutionSet(Points, {})".format(self.points)
        if self.status == FAMILY:
            return "ActionSolutionSet(Family, dim={}, residual={})".format(
                self.dim, len(self.residual_constraints))
        return "ActionSolutionSet(Empty)"


def _unique(actions):
    seen, out = set(), []
    for u in actions:
        if u not in seen:
            seen.add(u)
            out.append(u)
    return out


def _linear_rows(p: OperadPresentation, mode: str, alpha_equals_beta: Optional[bool]):
    """Rows of the linear system in x = (a_0..a_{n-1}, b_0..b_{n-1})."""
    n = p.n
    rows, rhs = [], []

    def add(coeffs_a, coeffs_b, value=ZERO):
        rows.append(list(coeffs_a) + list(coeffs_b))
        rhs.append(value)

    zero = [ZERO] * n
    for r in p.relations:
        L, R = r.left, r.right
        D = L - R
        for t in range(n):
            # C1: Σ_s (L - R)[s,t] b_s = 0
            add(zero, D.col(t))
        for s in range(n):
            # C3: Σ_t (L - R)[s,t] a_t = 0
            add(D.row(s), zero)
        for t in range(n):
            # C2: Σ_s L[s,t] a_s - Σ_u R[t,u] b_u = 0
            add(L.col(t), -R.row(t))
        if mode == "coherent":
            q = next(i for i in range(n) if p.star[i] != 0)
            for s in range(n):
                if s == q:
                    continue
                # L·b and Rᵀ·a are multiples of ★; with C1, C3 and α(★) = β(★) = 1
                # this already forces C4 and C5
                add(zero, L.row(s) * p.star[q] - L.row(q) * p.star[s])
                add(R.col(s) * p.star[q] - R.col(q) * p.star[s], zero)
    add(p.star, zero, ONE)
    add(zero, p.star, ONE)
    if alpha_equals_beta:
        for i in range(n):
            add(Vec.unit(n, i), -Vec.unit(n, i))
    return rows, rhs


def _quadratic_residuals(p: OperadPresentation, aff: AffineSet, lam):
    """C4 and C5 residual components as polynomials in the family parameters."""
    n = p.n
    x = [to_sympy(c) for c in aff.particular]
    for l, d in zip(lam, aff.directions):
        x = [xi + l * to_sympy(di) for xi, di in zip(x, d)]
    a, b = x[:n], x[n:]
    star = [to_sympy(c) for c in p.star]
    out = []
    for r in p.relations:
        L = [(s, t, to_sympy(r.left[s, t])) for s in range(n) for t in range(n) if r.left[s, t] != 0]
        R = [(s, t, to_sympy(r.right[s, t])) for s in range(n) for t in range(n) if r.right[s, t] != 0]
        bRb = sum((c * b[s] * b[t] for s, t, c in R), sympy.Integer(0))
        aLa = sum((c * a[s] * a[t] for s, t, c in L), sympy.Integer(0))
        Lb = [sympy.Integer(0)] * n
        Ra = [sympy.Integer(0)] * n
        for s, t, c in L:
            Lb[s] += c * b[t]
        for s, t, c in R:
            Ra[t] += c * a[s]
        for i in range(n):
            out.append(sympy.expand(Lb[i] - bRb * star[i]))
            out.append(sympy.expand(aLa * star[i] - Ra[i]))
    return [e for e in out if e != 0]


def _as_poly(expr, lam):
    return sympy.Poly(expr, *lam, domain=sympy.QQ)


def _verified(p, mode, actions):
    for u in actions:
        if not check(p, u, mode).holds:
            raise RuntimeError("Solver produced an action that fails the {} criterion: {}".format(mode, u))
    return actions


def _filter_asymmetric(actions, alpha_equals_beta):
    if alpha_equals_beta is False:
        return [u for u in actions if not u.symmetric]
    return actions


def _compiled(poly):
    return [(monom, from_sympy(c)) for monom, c in poly.terms()]


def _vanishes(terms, params) -> bool:
    total = ZERO
    for monom, c in terms:
        v = c
        for x, e in zip(params, monom):
            if e:
                v *= x ** e
        total += v
    return total == 0


def _probe(p: OperadPresentation, aff: AffineSet, mode: str, polys) -> List[UnitAction]:
    k = aff.dim
    values = (ZERO, ONE, -ONE) if 3 ** k <= PROBE_LIMIT else (ZERO, ONE)
    grid = itertools.islice(itertools.product(values, repeat=k), PROBE_LIMIT)
    compiled = [_compiled(poly) for poly in polys]
    found = []
    for params in grid:
        if not all(_vanishes(terms, params) for terms in compiled):
            continue
        u = UnitAction.from_vector(aff.point(params))
        if check(p, u, mode).holds:
            found.append(u)
    logger("probed family of dimension", k, "found", len(found), "verified points")
    return found


def _family(p, mode, aff, residual, samples, alpha_equals_beta):
    particular = aff.particular
    if alpha_equals_beta is False:
        candidates = [aff.particular] + [aff.particular + d for d in aff.directions]
        asym = [c for c in candidates if not UnitAction.from_vector(c).symmetric]
        if not asym:
            # the whole family lies on the diagonal α = β
            return ActionSolutionSet(EMPTY)
        if not residual:
            particular = asym[0]
    return ActionSolutionSet(FAMILY,
                             particular=UnitAction.from_vector(particular),
                             directions=Subspace(2 * p.n, aff.directions),
                             residual_constraints=residual,
                             samples=_filter_asymmetric(_verified(p, mode, samples), alpha_equals_beta),
                             affine=aff)


###
###   solve(p, mode, alpha_equals_beta)
###
###   Compatible mode solves the linear system C1-C3 together with α(★) =
###   β(★) = 1. Coherent mode adds the linear consequences of C4 and C5, then
###   alternates between substituting the affine solution into the quadratic
###   residuals and feeding back every residual that turned affine. What is
###   left is resolved exactly on lines (rational roots only) and reported
###   otherwise.
###
###   alpha_equals_beta = True  imposes α = β,
###                       False keeps only solutions with α ≠ β,
###                       None  leaves both.
###

def solve(p: OperadPresentation, mode: str = "coherent",
          alpha_equals_beta: Optional[bool] = None) -> ActionSolutionSet:
    _check_mode(mode)
    n = p.n
    rows, rhs = _linear_rows(p, mode, alpha_equals_beta)

    while True:
        aff = solve_affine(Mat.from_rows(rows, 2 * n), Vec(rhs))
        if aff is INFEASIBLE:
            logger("linear system infeasible")
            return ActionSolutionSet(EMPTY)
        logger("{} solution space of dimension {}".format(mode, aff.dim))
        if mode == "compatible":
            break
        lam = sympy.symbols("l0:{}".format(aff.dim)) if aff.dim > 0 else ()
        residual = _quadratic_residuals(p, aff, lam)
        if aff.dim == 0:
            if residual:
                return ActionSolutionSet(EMPTY)
            break
        polys = [_as_poly(e, lam) for e in residual]
        new_rows = 0
        for poly in polys:
            if poly.total_degree() == 0:
                logger("inconsistent constant residual", poly.as_expr())
                return ActionSolutionSet(EMPTY)
            if poly.total_degree() == 1:
                coeffs = [ZERO] * (2 * n)
                for i, l in enumerate(lam):
                    coeffs[aff.free[i]] = from_sympy(poly.coeff_monomial(l))
                rows.append(coeffs)
                rhs.append(-from_sympy(poly.coeff_monomial(1)))
                new_rows += 1
        if new_rows == 0:
            break
        logger("folded", new_rows, "affine residuals into the linear system")

    if mode == "compatible" or not residual:
        if aff.dim == 0:
            points = _filter_asymmetric([UnitAction.from_vector(aff.particular)], alpha_equals_beta)
            return ActionSolutionSet(POINTS, _verified(p, mode, points)) if points else ActionSolutionSet(EMPTY)
        return _family(p, mode, aff, [], [], alpha_equals_beta)

    if aff.dim == 1:
        return _solve_line(p, mode, aff, polys, lam[0], alpha_equals_beta)

    constraints = ["{} = 0".format(poly.as_expr()) for poly in polys]
    logger("family of dimension", aff.dim, "with", len(constraints), "unresolved quadratic constraints")
    return _family(p, mode, aff, constraints, _probe(p, aff, mode, polys), alpha_equals_beta)


def _solve_line(p, mode, aff, polys, l, alpha_equals_beta) -> ActionSolutionSet:
    g = reduce(lambda f, h: f.gcd(h), polys)
    if g.degree() == 0:
        return ActionSolutionSet(EMPTY)
    roots = sorted(from_sympy(r) for r in g.ground_roots())
    notes = []
    for factor, _ in g.factor_list()[1]:
        if factor.degree() == 2:
            notes.append("irrational roots of {} = 0 (discriminant {})".format(
                factor.as_expr(), sympy.discriminant(factor.as_expr(), l)))
        elif factor.degree() > 2:
            notes.append("irrational roots of {} = 0".format(factor.as_expr()))
    points = [UnitAction.from_vector(aff.point([t])) for t in roots]
    points = _filter_asymmetric(_verified(p, mode, points), alpha_equals_beta)
    if not points:
        return ActionSolutionSet(EMPTY, residual_constraints=notes)
    return ActionSolutionSet(POINTS, points, residual_constraints=notes)
