"""Single-valued pseudocomplement notions on finite posets.

Covers pseudocomplements inside sections [y,1], the relative and the
sectional pseudocomplement, negation against the bottom element, the
standard negation laws, and the complemented skeleton carved out by
double negation (the Glivenko construction).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NoBottomElement,
    NotPseudocomplemented,
    NotPseudocomplementedSections,
    NoTopElement,
)
from .order import Poset, iter_bits
from .reports import CheckReport


@dataclass(frozen=True)
class SectionTable:
    """Partial map (x, y) -> pseudocomplement of x inside [y, 1].

    Entries exist exactly for the pairs where y <= x and the
    pseudocomplement exists; the undefined cells are the dashes of the
    printed tables.
    """

    poset: Poset
    entries: dict[tuple[int, int], int]

    def defined(self, x: int, y: int) -> bool:
        return (x, y) in self.entries

    def get(self, x: int, y: int) -> int | None:
        return self.entries.get((x, y))

    def __len__(self) -> int:
        return len(self.entries)


def section_pseudocomplement(P: Poset, x: int, y: int) -> int | None:
    """Greatest z with L(x,z) n [y,1] = {y}, or None when no greatest exists.

    The candidate set is searched over the whole carrier; any candidate
    automatically satisfies y <= z (and requires y <= x), so for
    comparable pairs this coincides with the search inside the section.
    """
    if P.top is None:
        raise NoTopElement("section pseudocomplements require a top element")
    sec = P.up[y]
    want = 1 << y
    cand = 0
    for z in range(P.n):
        if P.down[x] & P.down[z] & sec == want:
            cand |= 1 << z
    if not cand:
        return None
    return P.greatest_of(cand)


def verify_pseudocomplemented_sections(
    P: Poset, all_witnesses: bool = False
) -> tuple[CheckReport, SectionTable | None]:
    """Check that every section [y,1] is pseudocomplemented.

    Returns the report plus the full table of x^y values on success
    (None on failure; the report then carries a witness pair).
    """
    report = CheckReport("pseudocomplemented-sections")
    if P.top is None:
        report.run_law("top", iter([()]), lambda w: (), all_witnesses)
        return report, None
    report.run_law("top", iter(()), lambda w: (), all_witnesses)
    entries: dict[tuple[int, int], int] = {}

    def failures():
        for y in range(P.n):
            for x in iter_bits(P.up[y]):
                z = section_pseudocomplement(P, x, y)
                if z is None:
                    yield (x, y)
                else:
                    entries[(x, y)] = z

    verdict = report.run_law("sections", failures(), P.labels_of, all_witnesses)
    if not verdict.passed:
        return report, None
    return report, SectionTable(P, entries)


def has_pseudocomplemented_sections(P: Poset) -> bool:
    report, _ = verify_pseudocomplemented_sections(P)
    return report.passed


def section_table(P: Poset) -> SectionTable:
    """The full x^y table; raises when some section pseudocomplement is missing."""
    report, table = verify_pseudocomplemented_sections(P)
    if table is None:
        fail = report.failures()[0]
        where = f" at ({','.join(fail.witness)})" if fail.witness else ""
        raise NotPseudocomplementedSections(f"missing section pseudocomplement{where}")
    return table


def relative_pseudocomplement(P: Poset, x: int, y: int) -> int | None:
    """Greatest z with L(x,z) contained in L(y), or None."""
    cand = 0
    for z in range(P.n):
        if not P.down[x] & P.down[z] & ~P.down[y]:
            cand |= 1 << z
    if not cand:
        return None
    return P.greatest_of(cand)


def sectional_pseudocomplement(P: Poset, x: int, y: int) -> int | None:
    """Greatest z with L(U(x,y), z) = L(y), or None."""
    lu = P.lower_mask(P.up[x] & P.up[y])
    cand = 0
    for z in range(P.n):
        if lu & P.down[z] == P.down[y]:
            cand |= 1 << z
    if not cand:
        return None
    return P.greatest_of(cand)


def pseudocomplement(P: Poset, x: int) -> int | None:
    """Greatest z with L(x,z) = {0}; needs a bottom element."""
    if P.bottom is None:
        raise NoBottomElement("pseudocomplements require a bottom element")
    want = 1 << P.bottom
    cand = 0
    for z in range(P.n):
        if P.down[x] & P.down[z] == want:
            cand |= 1 << z
    if not cand:
        return None
    return P.greatest_of(cand)


def negation(P: Poset, x: int) -> int:
    """x^0, i.e. the pseudocomplement of x inside the whole bounded poset."""
    if P.bottom is None:
        raise NoBottomElement("negation requires a bottom element")
    if not has_pseudocomplemented_sections(P):
        raise NotPseudocomplementedSections("negation requires pseudocomplemented sections")
    z = section_pseudocomplement(P, x, P.bottom)
    assert z is not None
    return z


def negation_map(P: Poset) -> tuple[int, ...]:
    """The value of x^0 for every element, as a tuple indexed by element.

    Requires a bottom element and a total pseudocomplement (no check of
    the other sections is made here)."""
    out = []
    for x in range(P.n):
        z = pseudocomplement(P, x)
        if z is None:
            raise NotPseudocomplemented(
                f"element {P.labels[x]} has no pseudocomplement"
            )
        out.append(z)
    return tuple(out)


def negation_laws_report(P: Poset, all_witnesses: bool = False) -> CheckReport:
    """Negation laws on a bounded poset with pseudocomplemented sections:
    bounds swap, antitonicity, x <= not not x, triple-negation collapse,
    and contraposition through the implication operator."""
    from .operators import implication  # local import; operators builds on this module

    if P.bottom is None:
        raise NoBottomElement("negation laws require a bottom element")
    if not has_pseudocomplemented_sections(P):
        raise NotPseudocomplementedSections(
            "negation laws require pseudocomplemented sections"
        )
    neg = negation_map(P)
    top = P.top
    report = CheckReport("negation-laws")

    def bounds_swap():
        if neg[P.bottom] != top or neg[top] != P.bottom:
            yield (P.bottom, top)

    def antitone():
        for x in range(P.n):
            for y in iter_bits(P.up[x]):
                if not P.le(neg[y], neg[x]):
                    yield (x, y)

    def extensive():
        for x in range(P.n):
            if not P.le(x, neg[neg[x]]):
                yield (x,)

    def triple_collapse():
        for x in range(P.n):
            if neg[neg[neg[x]]] != neg[x]:
                yield (x,)

    def contraposition():
        unit = (top,)
        for x in range(P.n):
            for y in range(P.n):
                if implication(P, x, y) == unit and implication(P, neg[y], neg[x]) != unit:
                    yield (x, y)

    report.run_law("bounds-swap", bounds_swap(), P.labels_of, all_witnesses)
    report.run_law("antitone", antitone(), P.labels_of, all_witnesses)
    report.run_law("double-negation-extensive", extensive(), P.labels_of, all_witnesses)
    report.run_law("triple-negation-collapse", triple_collapse(), P.labels_of, all_witnesses)
    report.run_law("contraposition", contraposition(), P.labels_of, all_witnesses)
    return report


def glivenko_skeleton(P: Poset, all_witnesses: bool = False) -> tuple[Poset, CheckReport]:
    """Induced subposet on the double-negation-closed elements.

    Works on any bounded poset whose pseudocomplement x^0 is total.  The
    report certifies that the carrier is exactly the set of fixed points
    of double negation and that negation complements every member
    inside the subposet.
    """
    if P.top is None:
        raise NoTopElement("the skeleton requires a top element")
    if P.bottom is None:
        raise NoBottomElement("the skeleton requires a bottom element")
    neg = negation_map(P)
    prime = sorted(set(neg))
    prime_mask = P.mask_of(prime)
    sub = P.restrict(prime)
    report = CheckReport("glivenko-skeleton")

    def fixed_points():
        fixed = {x for x in range(P.n) if neg[neg[x]] == x}
        for x in fixed.symmetric_difference(prime):
            yield (x,)

    def complementation():
        bot, top = 1 << P.bottom, 1 << P.top
        for a in prime:
            na = neg[a]
            meets_at_bottom = P.down[a] & P.down[na] & prime_mask == bot
            joins_at_top = P.up[a] & P.up[na] & prime_mask == top
            if not (na in prime and meets_at_bottom and joins_at_top):
                yield (a,)

    report.run_law("double-negation-fixed-points", fixed_points(), P.labels_of, all_witnesses)
    report.run_law("complementation", complementation(), P.labels_of, all_witnesses)
    return sub, report
