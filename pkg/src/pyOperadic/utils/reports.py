"""
JSON-ready dictionaries for verdicts, solution sets, class reports and oracle
results. Scalars are written as rational strings, vectors in generator order.
"""

from pyOperadic.exactlin.scalars import format_scalar
from pyOperadic.freealg.box import BoxElement


def vector_json(v) -> list:
    return [format_scalar(c) for c in v]


def action_json(u) -> dict:
    return {"alpha": vector_json(u.alpha), "beta": vector_json(u.beta)}


def verdict_json(v) -> dict:
    return {
        "mode": v.mode,
        "holds": v.holds,
        "coherent": v.coherent,
        "compatible": v.compatible,
        "failures": [
            {"relation": f.relation, "equation": f.tag, "residual": vector_json(f.residual)}
            for f in v.failures
        ],
    }


def solution_json(res) -> dict:
    doc = {"status": res.status}
    if res.points:
        doc["points"] = [action_json(u) for u in res.points]
    if res.particular is not None:
        doc["particular"] = action_json(res.particular)
        doc["dimension"] = res.dim
        doc["directions"] = [vector_json(d) for d in res.directions.vectors()]
    if res.samples:
        doc["samples"] = [action_json(u) for u in res.samples]
    if res.residual_constraints:
        doc["residual_constraints"] = list(res.residual_constraints)
    return doc


def class_report_json(rep) -> dict:
    doc = {"class": rep.best, "containment": rep.containment}
    if rep.witness is not None:
        doc["witness"] = action_json(rep.witness)
        doc["basis"] = [vector_json(rep.basis.col(j)) for j in range(rep.basis.cols)]
    return doc


def _element_json(f, e):
    if isinstance(e, BoxElement):
        return e.format(f)
    return f.format(e)


def counterexample_json(f, c) -> dict:
    return {
        "relation_index": c.relation_index,
        "a_triple": list(c.a_triple) if c.a_triple is not None else None,
        "b_triple": list(c.b_triple),
        "lhs": _element_json(f, c.lhs),
        "rhs": _element_json(f, c.rhs),
    }


def oracle_json(f, mode, res) -> dict:
    doc = {"mode": mode, "holds": res.holds, "evaluated": res.evaluated, "skipped": res.skipped}
    if res.counterexample is not None:
        doc["counterexample"] = counterexample_json(f, res.counterexample)
    return doc


def disagreements_json(mode, found) -> dict:
    return {
        "mode": mode,
        "disagreements": [
            dict(action_json(d.action), oracle=d.oracle, criterion=d.criterion) for d in found
        ],
    }
