"""Sweep every labeled poset on up to five points and survey the landscape.

Counts the universe, how many posets carry pseudocomplemented sections,
how the section property relates to relative pseudocomplementation, and
how often the two monotonicity readings of the residuation condition
come apart.

Run:  python demos/05_corpus_survey.py
"""

from unsharp import (
    corpus_stats,
    enumerate_posets,
    filter_pc_sections,
    relative_pseudocomplement,
    unsharp_residuation_report,
)

print("n  posets  with_top  pc_sections  lattices  rel_pc")
for n in range(1, 6):
    s = corpus_stats(n)
    print(f"{s.n}  {s.total_posets:6}  {s.with_top:8}  {s.pc_sections:11}"
          f"  {s.lattices:8}  {s.rel_pc:6}")

split = diverging = total = 0
for P, table in filter_pc_sections(enumerate_posets(5)):
    total += 1
    if any(
        relative_pseudocomplement(P, x, y) is None
        for x in range(P.n)
        for y in range(P.n)
    ):
        split += 1
    if unsharp_residuation_report(P).readings_diverge:
        diverging += 1

print(f"\nof the {total} five-point posets with pseudocomplemented sections:")
print(f"  {split} are not relatively pseudocomplemented "
      "(sections strictly generalise the relative notion)")
print(f"  {diverging} have a conjunction cell with no single dominator, "
      "so the two monotonicity readings differ")
