"""
Built-in presentations.

    assoc       associative algebras                        ·
    dend        dendriform dialgebras                       ≺ ≻
    tri         dendriform trialgebras                      ≺ ≻ ∘
    ns          NS-algebras                                 ≺ ≻ •
    twoassoc    2-associative algebras (two associative)    ∗ ·
    assocdialg  associative dialgebras                      ⊣ ⊢

Relations are written with side terms "a⊗b" keyed by generator labels; the
label "★" in a term expands to the distinguished associative operation.
"""

from typing import Dict, List, Tuple

from pyOperadic.exactlin.matrices import Vec, Mat
from pyOperadic.exactlin.scalars import ONE, ZERO, parse_csv
from pyOperadic.operad.presentation import OperadPresentation, RelPair, PresentationError, require_valid

STAR = "★"

Side = List[Tuple[str, str]]

_SPECS: Dict[str, dict] = {
    "assoc": {
        "gens": ["·"],
        "star": ["·"],
        "relations": [
            ([("·", "·")], [("·", "·")]),
        ],
    },
    "dend": {
        "gens": ["≺", "≻"],
        "star": ["≺", "≻"],
        "relations": [
            ([("≺", "≺")], [("≺", "≺"), ("≺", "≻")]),
            ([("≻", "≺")], [("≻", "≺")]),
            ([("≺", "≻"), ("≻", "≻")], [("≻", "≻")]),
        ],
    },
    "tri": {
        "gens": ["≺", "≻", "∘"],
        "star": ["≺", "≻", "∘"],
        "relations": [
            ([("≺", "≺")], [("≺", STAR)]),
            ([("≻", "≺")], [("≻", "≺")]),
            ([(STAR, "≻")], [("≻", "≻")]),
            ([("≻", "∘")], [("≻", "∘")]),
            ([("≺", "∘")], [("∘", "≻")]),
            ([("∘", "≺")], [("∘", "≺")]),
            ([("∘", "∘")], [("∘", "∘")]),
        ],
    },
    "ns": {
        "gens": ["≺", "≻", "•"],
        "star": ["≺", "≻", "•"],
        "relations": [
            ([("≺", "≺")], [("≺", STAR)]),
            ([("≻", "≺")], [("≻", "≺")]),
            ([(STAR, "≻")], [("≻", "≻")]),
            ([(STAR, "•"), ("•", "≺")], [("≻", "•"), ("•", STAR)]),
        ],
    },
    "twoassoc": {
        "gens": ["∗", "·"],
        "star": ["∗"],
        "choices": ["∗", "·"],
        "relations": [
            ([("∗", "∗")], [("∗", "∗")]),
            ([("·", "·")], [("·", "·")]),
        ],
    },
    "assocdialg": {
        "gens": ["⊣", "⊢"],
        "star": ["⊣"],
        "choices": ["⊣", "⊢"],
        "relations": [
            ([("⊣", "⊣")], [("⊣", "⊣")]),
            ([("⊢", "⊢")], [("⊢", "⊢")]),
            ([("⊣", "⊣")], [("⊣", "⊢")]),
            ([("⊢", "⊣")], [("⊢", "⊣")]),
            ([("⊣", "⊢")], [("⊢", "⊢")]),
        ],
    },
}

NAMES = tuple(_SPECS)


def _factor(label: str, gens, star: Vec) -> Vec:
    if label == STAR:
        return star
    return Vec.unit(len(gens), gens.index(label))


def _side(terms: Side, gens, star: Vec) -> Mat:
    n = len(gens)
    m = Mat.zeros(n, n)
    for a, b in terms:
        m = m + Mat.outer(_factor(a, gens, star), _factor(b, gens, star))
    return m


def _star_vector(labels, gens) -> Vec:
    return Vec([ONE if g in labels else ZERO for g in gens])


def catalog(name: str, star=None) -> OperadPresentation:
    """
    The built-in presentation called name. For operads with several associative
    generators, star may name the generator to distinguish; any operad also
    accepts an explicit coordinate vector or csv string, which is re-validated.
    """
    if name not in _SPECS:
        raise PresentationError("Unknown catalog operad '{}', expected one of {}".format(name, list(NAMES)))
    spec = _SPECS[name]
    gens = spec["gens"]
    default = _star_vector(spec["star"], gens)
    relations = [
        RelPair(_side(left, gens, default), _side(right, gens, default))
        for left, right in spec["relations"]
    ]
    p = OperadPresentation(name, gens, relations, default)
    if star is None:
        return p
    if isinstance(star, str) and star in gens:
        if star not in spec.get("choices", []):
            raise PresentationError("'{}' is not a selectable associative operation of {}".format(star, name))
        return require_valid(p.with_star(Vec.unit(len(gens), gens.index(star))))
    if isinstance(star, str):
        star = parse_csv(star)
    return require_valid(p.with_star(star if isinstance(star, Vec) else Vec(star)))


def star_choices(name: str) -> List[str]:
    spec = _SPECS[name]
    return list(spec.get("choices", []))
