"""
operadic: command line front end.

    operadic catalog
    operadic show        --operad dend
    operadic check       --operad dend --alpha 1,0 --beta 0,1 --mode coherent
    operadic solve       --operad tri --mode compatible
    operadic classify    --operad ns
    operadic product     dend dend -o quadri.json
    operadic dual        --operad dend -o dual.json
    operadic associative --operad assocdialg 1,0 [--direction -1,1]
    operadic oracle      --operad dend --alpha 1,0 --beta 0,1 | --grid

Operads are catalog names, JSON files or "-" for stdin. Exit status is 2 for
malformed input, 1 when a check or oracle fails or solve finds nothing, and 0
otherwise.
"""

import argparse
import json
import os
import re
import sys

from pyOperadic.exactlin.matrices import Vec
from pyOperadic.exactlin.scalars import parse_csv, parse_scalar
from pyOperadic.freealg.oracle import oracle, oracle_grid
from pyOperadic.freealg.truncated import truncated_free
from pyOperadic.operad.catalog import NAMES, catalog, star_choices
from pyOperadic.operad.serialization import loads, to_json_dict, vector_from_json
from pyOperadic.transform.associative import ALL_T, check_associative, find_associative_on_line
from pyOperadic.transform.black_square import black_square_all
from pyOperadic.transform.duality import dual
from pyOperadic.unit_action.classification import classify
from pyOperadic.unit_action.criterion import MODES, UnitAction, check
from pyOperadic.unit_action.solver import solve
from pyOperadic.utils import reports
from pyOperadic.utils.printing import set_verbose, is_verbose, format_vector, format_labelled, format_tensor_side

VERBS = ("catalog", "show", "check", "solve", "classify", "product", "dual", "associative", "oracle")

# flags whose value may be a signed rational list such as -1,1
VECTOR_FLAGS = ("--alpha", "--beta", "--star", "--direction")
_SIGNED = re.compile(r"^-[\d.]")


def _attach_signed_values(argv):
    """argparse reads "-1,1" as an option string; glue such values to their flag."""
    out = []
    it = iter(argv)
    for arg in it:
        if arg in VECTOR_FLAGS:
            value = next(it, None)
            if value is not None and _SIGNED.match(value):
                out.append("{}={}".format(arg, value))
                continue
            out.append(arg)
            if value is not None:
                out.append(value)
            continue
        out.append(arg)
    return out


EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="operadic", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("operands", nargs="*", help="operads (product), an operation (associative) or an operad source")
    parser.add_argument("--operad", default=None, help="catalog name, JSON file or - for stdin")
    parser.add_argument("--alpha", default=None, help="α as comma separated rationals or a JSON file")
    parser.add_argument("--beta", default=None, help="β as comma separated rationals or a JSON file")
    parser.add_argument("--mode", choices=MODES, default="coherent")
    parser.add_argument("--json", action="store_true", help="machine readable output")
    parser.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    parser.add_argument("--star", default=None, help="override the distinguished operation (re-validated)")
    parser.add_argument("--select-star", default=None, help="pick a catalog star by generator label")
    parser.add_argument("--direction", default=None, help="search a line x + t·d for associative operations")
    parser.add_argument("--grid", action="store_true", help="sweep the oracle over the rational grid")
    parser.add_argument("--seed", type=int, default=0, help="seed of the grid subsample")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


### input


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as fh:
        return fh.read()


def load_operad(source: str, star=None, select=None):
    override = select if select is not None else star
    if source in NAMES:
        return catalog(source, star=override)
    if source != "-" and not os.path.exists(source):
        raise InputError("'{}' is neither a catalog operad ({}) nor a file".format(source, ", ".join(NAMES)))
    return loads(_read(source), star=override)


def read_vector(text: str, gens) -> Vec:
    if text == "-" or os.path.exists(text):
        try:
            doc = json.loads(_read(text))
        except json.JSONDecodeError as err:
            raise InputError("Malformed JSON vector in '{}': {}".format(text, err))
        if isinstance(doc, dict):
            return vector_from_json(doc, gens, where=text)
        if isinstance(doc, list):
            if not all(isinstance(c, str) for c in doc):
                raise InputError("Vector entries in '{}' must be rational strings".format(text))
            v = Vec([parse_scalar(c) for c in doc])
        else:
            raise InputError("A vector file holds a list or a label-keyed object")
    else:
        v = Vec(parse_csv(text))
    if v.dim != len(gens):
        raise InputError("Vector {} has {} coordinates for {} generators".format(text, v.dim, len(gens)))
    return v


def _operad(args, position=0):
    source = args.operad
    if source is None and len(args.operands) > position:
        source = args.operands[position]
    if source is None:
        raise InputError("{} needs --operad".format(args.verb))
    return load_operad(source, args.star, args.select_star)


def _action(args, p) -> UnitAction:
    if args.alpha is None or args.beta is None:
        raise InputError("{} needs --alpha and --beta".format(args.verb))
    return UnitAction(read_vector(args.alpha, p.gens), read_vector(args.beta, p.gens))


### output


def _write(args, text: str):
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _dump(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2)


def _report(args, doc, lines):
    """Human lines on stdout; the JSON report on -o, or on stdout in place of the lines with --json."""
    if args.json and args.output is None:
        print(_dump(doc))
        return
    for line in lines:
        print(line)
    if args.output is not None:
        _write(args, _dump(doc))


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _action_line(u: UnitAction) -> str:
    return "α = {}  β = {}".format(format_vector(u.alpha), format_vector(u.beta))


def _side_note(args, lines):
    # keep stdout clean when it carries a presentation
    stream = sys.stdout if args.output is not None else sys.stderr
    for line in lines:
        print(line, file=stream)


### verbs


def cmd_catalog(args) -> int:
    rows = []
    for name in NAMES:
        p = catalog(name)
        rows.append({"name": name, "generators": list(p.gens),
                     "star": format_labelled(p.gens, p.star), "star_choices": star_choices(name)})
    lines = ["{:<11} {:<8} ★ = {}{}".format(
        r["name"], " ".join(r["generators"]), r["star"],
        "  (choices: {})".format(", ".join(r["star_choices"])) if r["star_choices"] else "") for r in rows]
    _report(args, rows, lines)
    return EXIT_OK


def cmd_show(args) -> int:
    p = _operad(args)
    if args.json or args.output is not None:
        _write(args, _dump(to_json_dict(p)))
        return EXIT_OK
    print("{}: generators {}, ★ = {}".format(p.name, " ".join(p.gens), format_labelled(p.gens, p.star)))
    for i, r in enumerate(p.relations):
        print("  [{}] ({}, {})".format(i, format_tensor_side(p.gens, r.left), format_tensor_side(p.gens, r.right)))
    return EXIT_OK


def cmd_check(args) -> int:
    p = _operad(args)
    u = _action(args, p)
    v = check(p, u, args.mode)
    lines = ["coherent: {}".format(_flag(v.coherent)), "compatible: {}".format(_flag(v.compatible))]
    for f in v.failures:
        lines.append("  relation {} {}: residual {}".format(f.relation, f.tag, format_vector(f.residual)))
    _report(args, reports.verdict_json(v), lines)
    return EXIT_OK if v.holds else EXIT_FALSE


def cmd_solve(args) -> int:
    p = _operad(args)
    res = solve(p, args.mode)
    lines = ["{} actions on {}: {}".format(args.mode, p.name, res.status)]
    for u in res.points:
        lines.append("  " + _action_line(u))
    if res.particular is not None:
        lines.append("  family of dimension {} through {}".format(res.dim, _action_line(res.particular)))
        for d in res.directions.vectors():
            lines.append("    direction {}".format(format_vector(d)))
    for u in res.samples:
        lines.append("  sample " + _action_line(u))
    for c in res.residual_constraints:
        lines.append("  unresolved: {}".format(c))
    _report(args, reports.solution_json(res), lines)
    return EXIT_FALSE if res.is_empty else EXIT_OK


def cmd_classify(args) -> int:
    p = _operad(args)
    rep = classify(p)
    lines = ["class: {}".format(rep.best)]
    if rep.witness is not None:
        lines.append("witness: " + _action_line(rep.witness))
        lines.append("adapted basis:")
        for j in range(rep.basis.cols):
            lines.append("  op{} = {}".format(j + 1, format_labelled(p.gens, rep.basis.col(j))))
        lines.append("containment: {}".format(_flag(rep.containment)))
    _report(args, reports.class_report_json(rep), lines)
    return EXIT_OK


def cmd_product(args) -> int:
    sources = list(args.operands)
    if args.operad is not None:
        sources.insert(0, args.operad)
    if len(sources) < 2:
        raise InputError("product needs at least two operads")
    p = black_square_all(*[load_operad(s) for s in sources])
    _write(args, _dump(to_json_dict(p)))
    _side_note(args, ["{}: {} generators, {} relations".format(p.name, p.n, len(p.relations))])
    return EXIT_OK


def cmd_dual(args) -> int:
    d = dual(_operad(args))
    _write(args, _dump(to_json_dict(d, candidates=d.candidates, with_star=False)))
    labels = [format_labelled(d.gens, x) for x in d.candidates]
    _side_note(args, ["{}: {} relations".format(d.name, len(d.relations)),
                      "associative candidates: [{}]".format(", ".join(labels))])
    return EXIT_OK


def cmd_associative(args) -> int:
    operands = list(args.operands)
    if args.operad is None and operands:
        args.operad = operands.pop(0)
    p = _operad(args)
    if not operands:
        raise InputError("associative needs an operation, e.g. 1,0")
    x = read_vector(operands[0], p.gens)
    if args.direction is None:
        ok = check_associative(p, x)
        _report(args, {"operation": reports.vector_json(x), "associative": ok},
                ["{} associative: {}".format(format_labelled(p.gens, x), _flag(ok))])
        return EXIT_OK if ok else EXIT_FALSE
    d = read_vector(args.direction, p.gens)
    roots = find_associative_on_line(p, x, d)
    if roots is ALL_T:
        _report(args, {"all": True, "roots": []}, ["every t"])
        return EXIT_OK
    _report(args, {"all": False, "roots": reports.vector_json(roots)},
            ["t = {}".format(", ".join(reports.vector_json(roots))) if roots else "no rational t"])
    return EXIT_OK if roots else EXIT_FALSE


def cmd_oracle(args) -> int:
    p = _operad(args)
    if args.grid:
        found = oracle_grid(p, args.mode, seed=args.seed, progress=is_verbose())
        lines = ["{} oracle vs criterion on {}: {} disagreements".format(args.mode, p.name, len(found))]
        lines += ["  " + _action_line(d.action) for d in found]
        _report(args, reports.disagreements_json(args.mode, found), lines)
        return EXIT_FALSE if found else EXIT_OK
    u = _action(args, p)
    res = oracle(p, u, args.mode)
    f = truncated_free(p)
    lines = ["oracle {}: {}".format(args.mode, _flag(res.holds))]
    if res.counterexample is not None:
        c = reports.counterexample_json(f, res.counterexample)
        lines.append("  relation {} at a = {}, b = {}".format(c["relation_index"], c["a_triple"], c["b_triple"]))
        lines.append("    lhs {}".format(c["lhs"]))
        lines.append("    rhs {}".format(c["rhs"]))
    _report(args, reports.oracle_json(f, args.mode, res), lines)
    return EXIT_OK if res.holds else EXIT_FALSE


COMMANDS = {
    "catalog": cmd_catalog,
    "show": cmd_show,
    "check": cmd_check,
    "solve": cmd_solve,
    "classify": cmd_classify,
    "product": cmd_product,
    "dual": cmd_dual,
    "associative": cmd_associative,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_intermixed_args(_attach_signed_values(argv))
    set_verbose(args.verbose)
    try:
        return COMMANDS[args.verb](args)
    except (ValueError, OSError) as err:
        # PresentationError, ScalarFormatError, DimensionError, NormalizationError and InputError
        print("operadic: error: {}".format(err), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
