"""Negation, its laws, and the complemented skeleton.

Negating against the bottom element satisfies the familiar
intuitionistic laws, and the image of double negation is always a
complemented subposet (the Glivenko construction).

Run:  python demos/04_negation_skeleton.py
"""

from unsharp import (
    build_from_covers,
    cover_relation,
    glivenko_skeleton,
    negation,
    negation_laws_report,
)

CROWN_TAIL = build_from_covers(
    "0 a b c d e 1".split(),
    [("0", "a"), ("a", "b"), ("0", "c"), ("b", "d"), ("b", "e"),
     ("c", "d"), ("c", "e"), ("d", "1"), ("e", "1")],
)
P = CROWN_TAIL

print("negation on the crown with tail:")
for x in range(P.n):
    print(f"  not {P.labels[x]} = {P.labels[negation(P, x)]}")

print("\nnegation laws:")
for line in negation_laws_report(P).lines():
    print(" ", line)

sub, report = glivenko_skeleton(P)
print("\nskeleton carrier:", " ".join(sub.labels))
print("skeleton covers:", cover_relation(sub))
for line in report.lines():
    print(" ", line)
print("b and c are each other's complements inside the skeleton")

CROWN = build_from_covers(
    "0 a b c d 1".split(),
    [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
     ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
)
sub2, _ = glivenko_skeleton(CROWN)
print("\nthe crown collapses to:", " ".join(sub2.labels),
      "(c and d are not double-negation fixed)")
