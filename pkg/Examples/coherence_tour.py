"""
Walk through the catalog: coherent unit actions, classification, black-square
products with their product actions, and the Koszul duals.

    python coherence_tour.py [-v] [--random N] [--seed S]
"""

import argparse

from pyOperadic.operad.catalog import NAMES, catalog
from pyOperadic.operad.random_presentations import default_rng, random_canonical_presentation
from pyOperadic.transform.black_square import black_square_all, product_action
from pyOperadic.transform.duality import dual
from pyOperadic.unit_action.classification import classify
from pyOperadic.unit_action.criterion import check
from pyOperadic.unit_action.solver import solve
from pyOperadic.utils.printing import set_verbose, format_labelled, format_vector

parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument("-v", "--verbose", help="log solver progress", action="store_true")
parser.add_argument("--random", help="number of random coh_neq sub-presentations to classify", type=int, default=5)
parser.add_argument("--seed", help="seed for the random presentations", type=int, default=1)
args = parser.parse_args()
set_verbose(args.verbose)

###
### Catalog
###

print("== catalog ==")
for name in NAMES:
    p = catalog(name)
    report = classify(p)
    res = solve(p, "coherent")
    print("{:<11} class {:<18} coherent solutions: {}".format(name, report.best, res.status))
    if report.witness is not None:
        print("{:<11} witness α = {}, β = {}".format("", format_vector(report.witness.alpha),
                                                      format_vector(report.witness.beta)))

###
### Products
###

print("\n== black-square products ==")
for names in [("dend", "dend"), ("tri", "tri"), ("tri", "ns"), ("dend", "dend", "dend")]:
    ops = [catalog(n) for n in names]
    p = black_square_all(*ops)
    u = classify(ops[0]).witness
    for q in ops[1:]:
        u = product_action(u, classify(q).witness)
    print("{:<16} {} generators, {:>2} relations, product action coherent: {}".format(
        " ⊠ ".join(names), p.n, len(p.relations), check(p, u, "coherent").coherent))

###
### Duals
###

print("\n== duals ==")
for name in NAMES:
    d = dual(catalog(name))
    labels = ", ".join(format_labelled(d.gens, x) for x in d.candidates)
    empty = [solve(d.with_star(x), "compatible").is_empty for x in d.candidates]
    print("{:<11} {:>2} relations, associative candidates [{}], compatible actions: {}".format(
        d.name, len(d.relations), labels, "none" if all(empty) else "some"))

###
### Random sub-presentations of the canonical space with α ≠ β
###

print("\n== random presentations ==")
rng = default_rng(args.seed)
for i in range(args.random):
    n = int(rng.integers(2, 5))
    p = random_canonical_presentation(rng, "coh_neq", n)
    print("{:<14} n = {}, {:>2} relations -> {}".format(p.name, n, len(p.relations), classify(p).best))
