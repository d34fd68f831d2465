"""The arrow table alone determines the poset.

Turn a poset into its arrow-table algebra, check the six axioms, then
rebuild the poset from nothing but the table and watch the structures
coincide.  Also: what happens when a single cell is edited.

Run:  python demos/02_algebra_roundtrip.py
"""

from unsharp import (
    NonSingletonSection,
    algebra_of,
    axioms_report,
    build_from_covers,
    cover_relation,
    poset_of,
    roundtrip_check,
)

CROWN_TAIL = build_from_covers(
    "0 a b c d e 1".split(),
    [("0", "a"), ("a", "b"), ("0", "c"), ("b", "d"), ("b", "e"),
     ("c", "d"), ("c", "e"), ("d", "1"), ("e", "1")],
)

A = algebra_of(CROWN_TAIL)
print("axioms on the crown-with-tail algebra:")
for line in axioms_report(A).lines():
    print(" ", line)

P, table = poset_of(A)
print("\nrebuilt covers:", cover_relation(P))
print("identical to the original:", P == CROWN_TAIL)
print("roundtrip report passed:", roundtrip_check(CROWN_TAIL).passed,
      "/", roundtrip_check(A).passed)

# edit one cell: a -> 0 is {c}; claiming {1} would force a <= 0
mutant = A.with_cell(A.index("a"), A.index("0"), {A.unit})
report = axioms_report(mutant)
bad = report.verdict("antisymmetry")
print("\nafter setting the (a,0) cell to the unit:")
print("  antisymmetry passed:", bad.passed, "witness:", bad.witness)

# pad a section cell instead: the axioms cannot see it, the rebuild can
exotic = A.with_cell(A.index("a"), A.index("0"), {A.index("c"), A.unit})
print("\npadded (a,0) cell still satisfies the axioms:", axioms_report(exotic).passed)
try:
    poset_of(exotic)
except NonSingletonSection as err:
    print("but the rebuild refuses it:", err)
