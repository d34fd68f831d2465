"""Adjointness between the set-valued conjunction and implication.

Membership in x (.) y is characterised by bounds plus one implication
inequality, and for comparable pairs the conjunction recovers the lower
element from the arrow value (an algebraic modus ponens).  The
monotonicity condition is shown in both readings; they split exactly
where a conjunction cell is a proper antichain.

Run:  python demos/03_residuation.py
"""

from unsharp import (
    build_from_covers,
    conjunction,
    divisibility_report,
    implication,
    lattice_relative_residuation_report,
    unsharp_residuation_report,
)

CROWN_TAIL = build_from_covers(
    "0 a b c d e 1".split(),
    [("0", "a"), ("a", "b"), ("0", "c"), ("b", "d"), ("b", "e"),
     ("c", "d"), ("c", "e"), ("d", "1"), ("e", "1")],
)
P = CROWN_TAIL
lab = P.labels_of

report = unsharp_residuation_report(P)
print("residuation verdicts on the crown with tail:")
for v in report.verdicts:
    print(f"  {'PASS' if v.passed else 'fail'} {v.law}"
          + (f"  witness {v.witness}" if v.witness else ""))
print("readings diverge:", report.readings_diverge)

d, e, b = P.index("d"), P.index("e"), P.index("b")
print("\nd (.) e =", lab(conjunction(P, d, e)))
print("b belongs because b <= d, b <= e and e -> b =", lab(implication(P, e, b)),
      "sits above d? ->", all(P.le(d, w) for w in implication(P, e, b)))

print("\ndivisibility:")
for line in divisibility_report(P).lines():
    print(" ", line)
print("e.g. d -> b =", lab(implication(P, d, b)),
      "and d (.) e meets the section above b in exactly b")

PENTAGON = build_from_covers(
    "0 a b c 1".split(),
    [("0", "a"), ("0", "b"), ("a", "c"), ("c", "1"), ("b", "1")],
)
print("\non the pentagon (a lattice) the reduction to relative residuation holds:")
for line in lattice_relative_residuation_report(PENTAGON).lines():
    print(" ", line)
