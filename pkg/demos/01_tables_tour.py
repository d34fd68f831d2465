"""Tour of the operator tables on three small posets.

The pentagon is a lattice whose sections are pseudocomplemented even
though relative pseudocomplements are missing; the crown adds a second
minimal upper bound so the implication becomes genuinely set-valued;
the crown with a tail is the running seven-element example.

Run:  python demos/01_tables_tour.py
"""

from unsharp import build_from_covers, is_lattice, relative_pseudocomplement
from unsharp.cli import render_table
from unsharp.operators import operator_table

PENTAGON = build_from_covers(
    "0 a b c 1".split(),
    [("0", "a"), ("0", "b"), ("a", "c"), ("c", "1"), ("b", "1")],
)
CROWN = build_from_covers(
    "0 a b c d 1".split(),
    [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
     ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
)
CROWN_TAIL = build_from_covers(
    "0 a b c d e 1".split(),
    [("0", "a"), ("a", "b"), ("0", "c"), ("b", "d"), ("b", "e"),
     ("c", "d"), ("c", "e"), ("d", "1"), ("e", "1")],
)


def show(P, name, kinds):
    print(f"== {name} (lattice: {is_lattice(P)})")
    for kind in kinds:
        print(render_table(operator_table(P, kind)))
        print()


show(PENTAGON, "pentagon", ["xy", "imp"])
c, a = PENTAGON.index("c"), PENTAGON.index("a")
print("relative pseudocomplement of c w.r.t. a:",
      relative_pseudocomplement(PENTAGON, c, a),
      "(absent: two maximal candidates, no greatest)\n")

show(CROWN, "crown", ["xy", "imp", "rel"])
print("on the crown the arrow cell (a,b) = {c,d} sits strictly above a*b = b\n")

show(CROWN_TAIL, "crown with tail", ["xy", "imp", "conj"])
print("d (.) e = {b,c}: the conjunction is set-valued exactly where the")
print("common lower bounds form an antichain")
