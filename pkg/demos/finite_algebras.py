#!/usr/bin/env python3
# The finite-algebra engine on the worked models: closure operators,
# brute-force lattices and the exhaustive length-2 case labels.
#
# Run from the repository root:  python3 demos/finite_algebras.py

import json

from l2lab import analyze_extension, classify_extension, parse_algebra

MODELS = [
    ("three copies of F2, diagonal base",
     {"q": 2, "product": ["F2", "F2", "F2"], "R": "diagonal"}),
    ("F2 inside F2 x F4 (t-closure jumps to F2 x F2)",
     {"q": 2, "product": ["F2", "F4"], "R": "diagonal"}),
    ("F2 x F2 inside F4 x F4 (two-point support)",
     {"q": 2, "product": ["F4", "F4"], "R": ["(1,0)"]}),
    ("co-pointwise minimal: F2 + square-zero plane",
     {"q": 2, "quotient": "F2[X,Y]/(X^2, X*Y, Y^2)", "R": "diagonal"}),
    ("truncated polynomials F2[Y]/(Y^3)",
     {"q": 2, "quotient": "F2[Y]/(Y^3)", "R": "diagonal"}),
    ("nilpotents over a SPIR: R = F2[t]/(t^2) in R[Y]/(Y^2-Y)",
     {"q": 2, "quotient": "F2[T,Y]/(T^2, Y^2 + Y)", "R": ["T"]}),
    ("finite field tower F2 in F16",
     {"q": 2, "quotient": "F2[X]/(X^4 + X + 1)", "R": "diagonal"}),
]

for title, doc in MODELS:
    S, R = parse_algebra(doc)
    a = analyze_extension(R, S)
    v = classify_extension(a)
    print("=" * 64)
    print(title)
    print("  document    :", json.dumps(doc))
    print("  dims        : R %d inside S %d over F%d" % (R.dim, S.dim, S.field.q))
    print("  conductor   : dim %d    crucial ideal: %s"
          % (a.conductor.dim,
             "dim %d" % a.crucial.dim if a.crucial is not None else "none"))
    print("  seminorm.   : dim %d    t-closure: dim %d"
          % (a.seminormalization.dim, a.t_closure.dim))
    print("  lattice     : %d subalgebras, longest chain %d"
          % (v["count_observed"], v["length"]))
    print("  case        : %s   (predicted count %s)"
          % (v["case"], v["count_predicted"]))
    fired = [p["name"] for p in v["predicates"] if p["applicable"]]
    print("  checks      : %d theorem predicates verified" % len(fired))
