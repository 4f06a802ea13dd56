"""
JSON documents for presentations.

    {
      "name": "dend",
      "generators": ["≺", "≻"],
      "star": {"≺": "1", "≻": "1"},
      "relations": [
        {"left":  [{"a": "≺", "b": "≺", "c": "1"}],
         "right": [{"a": "≺", "b": "≺", "c": "1"}, {"a": "≺", "b": "≻", "c": "1"}]},
        ...
      ]
    }

Dual documents omit "star" and carry "associative_candidates" instead.
"""

import json
import warnings
from typing import List, Optional

from pyOperadic.exactlin.matrices import Vec, Mat
from pyOperadic.exactlin.scalars import parse_scalar, format_scalar, parse_csv, ScalarFormatError, ZERO
from pyOperadic.exactlin.subspace import Subspace
from pyOperadic.operad.presentation import (
    OperadPresentation, RelPair, PresentationError, require_valid,
)

_TOP_KEYS = {"name", "generators", "star", "relations", "associative_candidates"}
_REL_KEYS = {"left", "right"}
_TERM_KEYS = {"a", "b", "c"}


def _check_keys(obj, allowed, where):
    if not isinstance(obj, dict):
        raise PresentationError("{} must be a JSON object".format(where))
    unknown = set(obj) - allowed
    if unknown:
        raise PresentationError("Unknown keys in {}: {}".format(where, sorted(unknown)))


def _coeff(value, where) -> object:
    if not isinstance(value, str):
        raise PresentationError("{}: coefficients must be rational strings, not {!r}".format(where, value))
    try:
        return parse_scalar(value)
    except ScalarFormatError as err:
        raise PresentationError("{}: {}".format(where, err))


def _side_to_json(gens, m: Mat) -> List[dict]:
    n = len(gens)
    return [
        {"a": gens[s], "b": gens[t], "c": format_scalar(m[s, t])}
        for s in range(n) for t in range(n) if m[s, t] != 0
    ]


def _side_from_json(terms, gens, where) -> Mat:
    if not isinstance(terms, list):
        raise PresentationError("{} must be a list of terms".format(where))
    n = len(gens)
    entries = [ZERO] * (n * n)
    for k, term in enumerate(terms):
        _check_keys(term, _TERM_KEYS, "{} term {}".format(where, k))
        if set(term) != _TERM_KEYS:
            raise PresentationError("{} term {} needs keys a, b and c".format(where, k))
        for key in ("a", "b"):
            if term[key] not in gens:
                raise PresentationError("{} term {}: unknown generator '{}'".format(where, k, term[key]))
        s, t = gens.index(term["a"]), gens.index(term["b"])
        entries[s * n + t] += _coeff(term["c"], "{} term {}".format(where, k))
    return Mat(n, n, entries)


def vector_to_json(gens, v: Vec) -> dict:
    return {g: format_scalar(c) for g, c in zip(gens, v) if c != 0}


def vector_from_json(obj, gens, where="star") -> Vec:
    _check_keys(obj, set(gens), where)
    return Vec([_coeff(obj.get(g, "0"), where) for g in gens])


def to_json_dict(p: OperadPresentation, candidates: Optional[List[Vec]] = None, with_star: bool = True) -> dict:
    doc = {"name": p.name, "generators": list(p.gens)}
    if with_star:
        doc["star"] = vector_to_json(p.gens, p.star)
    doc["relations"] = [
        {"left": _side_to_json(p.gens, r.left), "right": _side_to_json(p.gens, r.right)}
        for r in p.relations
    ]
    if candidates is not None:
        doc["associative_candidates"] = [[format_scalar(c) for c in v] for v in candidates]
    return doc


def _parse_star_override(star, gens) -> Vec:
    if isinstance(star, Vec):
        return star
    if isinstance(star, str) and star in gens:
        return Vec.unit(len(gens), list(gens).index(star))
    if isinstance(star, str):
        try:
            values = parse_csv(star)
        except ScalarFormatError as err:
            raise PresentationError("Bad star '{}': {}".format(star, err))
        return Vec(values)
    return Vec(star)


def from_json_dict(doc, star=None) -> OperadPresentation:
    """
    Build and validate a presentation. A dependent relation list is replaced by
    a basis of its span, with a warning. star overrides the stored star.
    """
    _check_keys(doc, _TOP_KEYS, "presentation")
    for key in ("name", "generators", "relations"):
        if key not in doc:
            raise PresentationError("Presentation is missing '{}'".format(key))
    gens = doc["generators"]
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        raise PresentationError("'generators' must be a list of strings")
    if len(set(gens)) != len(gens):
        raise PresentationError("Generator labels must be unique")
    n = len(gens)
    if n == 0:
        raise PresentationError("A presentation needs at least one generator")
    if not isinstance(doc["relations"], list):
        raise PresentationError("'relations' must be a list")
    relations = []
    for i, rel in enumerate(doc["relations"]):
        _check_keys(rel, _REL_KEYS, "relation {}".format(i))
        if set(rel) != _REL_KEYS:
            raise PresentationError("relation {} needs both left and right sides".format(i))
        relations.append(RelPair(
            _side_from_json(rel["left"], gens, "relation {} left".format(i)),
            _side_from_json(rel["right"], gens, "relation {} right".format(i)),
        ))

    span = Subspace(2 * n * n, [r.flatten() for r in relations])
    if span.dim != len(relations):
        warnings.warn("{} relations given but they span a space of dimension {}; using a row-reduced basis".format(
            len(relations), span.dim))
        relations = [RelPair.from_flat(v, n) for v in span.vectors()]

    if star is not None:
        star_vec = _parse_star_override(star, gens)
    elif "star" in doc:
        star_vec = vector_from_json(doc["star"], gens)
    elif doc.get("associative_candidates"):
        star_vec = Vec([_coeff(c, "associative candidate") for c in doc["associative_candidates"][0]])
        warnings.warn("No star given; using the first associative candidate {}".format(star_vec))
    else:
        raise PresentationError("Presentation has no star and no associative candidates")
    if star_vec.dim != n:
        raise PresentationError("Star has {} coordinates for {} generators".format(star_vec.dim, n))

    name = doc["name"]
    if not isinstance(name, str):
        raise PresentationError("'name' must be a string")
    return require_valid(OperadPresentation(name, gens, relations, star_vec))


def dumps(p: OperadPresentation, **kwargs) -> str:
    return json.dumps(to_json_dict(p, **kwargs), ensure_ascii=False, indent=2)


def loads(text: str, star=None) -> OperadPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise PresentationError("Malformed JSON: {}".format(err))
    return from_json_dict(doc, star=star)
