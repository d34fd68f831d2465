"""Arrow-table algebras, their axiom checker, and the two translations.

An algebra is a finite carrier with a total set-valued arrow and a
distinguished unit.  The six axioms characterise exactly the arrow
tables that arise from finite posets with pseudocomplemented sections;
``algebra_of`` and ``poset_of`` are the mutually inverse translations,
and ``roundtrip_check`` certifies the inversion on concrete instances.

Inside axioms, "cell = 1" means the cell is exactly {unit}, and an
arrow applied to an inner set is required to hit {unit} for every
member of that set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DuplicateLabel,
    NonSingletonSection,
    OrderAxiomFailure,
    SectionMismatch,
)
from .order import Poset, iter_bits
from .reports import CheckReport
from .sections import SectionTable, section_pseudocomplement, section_table
from .operators import _implication_cells

AXIOMS = (
    "unit",            # x -> x = x -> 1 = 1
    "antisymmetry",    # x -> y = y -> x = 1  implies  x = y
    "transitivity",    # x -> y = y -> z = 1  implies  x -> z = 1
    "minimality",      # y -> z = z -> x = z -> (x -> y) = 1  implies  z = y
    "adjointness",     # bounded pairs land below the arrow value
    "reconstruction",  # x -> y is the image of its minimal upper bounds
)


@dataclass(frozen=True)
class IAlgebra:
    """Carrier labels, total arrow table of non-empty cells, unit element."""

    labels: tuple[str, ...]
    arrow: tuple[tuple[frozenset[int], ...], ...]
    unit: int

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise DuplicateLabel("carrier labels must be distinct")
        if not 0 <= self.unit < n:
            raise ValueError("unit must be a carrier element")
        if len(self.arrow) != n or any(len(row) != n for row in self.arrow):
            raise ValueError("arrow table must be n x n")
        for row in self.arrow:
            for cell in row:
                if not cell or any(not 0 <= v < n for v in cell):
                    raise ValueError("arrow cells must be non-empty carrier subsets")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def with_cell(self, x: int, y: int, value) -> "IAlgebra":
        """Copy of the algebra with one cell replaced (for mutation testing)."""
        rows = [list(row) for row in self.arrow]
        rows[x][y] = frozenset(value)
        return IAlgebra(self.labels, tuple(tuple(r) for r in rows), self.unit)


def axioms_report(A: IAlgebra, laws=None, all_witnesses: bool = False) -> CheckReport:
    """Evaluate the axioms by exhaustive quantification over the carrier.

    ``laws`` restricts the check to a subset of ``AXIOMS`` (in that
    order); by default all six run.
    """
    n, arrow = A.n, A.arrow
    unit = frozenset((A.unit,))
    le = [[arrow[x][y] == unit for y in range(n)] for x in range(n)]
    labels = A.labels

    def to_labels(w):
        return tuple(labels[i] for i in w)

    def unit_law():
        for x in range(n):
            if arrow[x][x] != unit or arrow[x][A.unit] != unit:
                yield (x,)

    def antisymmetry():
        for x in range(n):
            for y in range(n):
                if x != y and le[x][y] and le[y][x]:
                    yield (x, y)

    def transitivity():
        for x in range(n):
            for y in range(n):
                if not le[x][y]:
                    continue
                for z in range(n):
                    if le[y][z] and not le[x][z]:
                        yield (x, y, z)

    def minimality():
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if z == y or not (le[y][z] and le[z][x]):
                        continue
                    if all(le[z][w] for w in arrow[x][y]):
                        yield (x, y, z)

    def adjointness():
        for y in range(n):
            for x in range(n):
                if not le[y][x]:
                    continue
                for u in range(n):
                    if not le[y][u]:
                        continue
                    if any(
                        z != y and le[y][z] and le[z][x] and le[z][u]
                        for z in range(n)
                    ):
                        continue
                    if not all(le[u][w] for w in arrow[x][y]):
                        yield (x, y, u)

    def reconstruction():
        for x in range(n):
            for y in range(n):
                image: set[int] = set()
                for z in range(n):
                    if not (le[x][z] and le[y][z]):
                        continue
                    if any(
                        u != z and le[x][u] and le[y][u] and le[u][z]
                        for u in range(n)
                    ):
                        continue
                    image |= arrow[z][y]
                if arrow[x][y] != image:
                    yield (x, y)

    generators = {
        "unit": unit_law,
        "antisymmetry": antisymmetry,
        "transitivity": transitivity,
        "minimality": minimality,
        "adjointness": adjointness,
        "reconstruction": reconstruction,
    }
    report = CheckReport("algebra-axioms")
    for law in laws if laws is not None else AXIOMS:
        report.run_law(law, generators[law](), to_labels, all_witnesses)
    return report


def algebra_of(P: Poset) -> IAlgebra:
    """Arrow table of a poset with pseudocomplemented sections; unit is the top."""
    table = section_table(P)
    cells = _implication_cells(P, table)
    return IAlgebra(P.labels, tuple(tuple(row) for row in cells), P.top)


def poset_of(A: IAlgebra) -> tuple[Poset, SectionTable]:
    """Rebuild the poset and its section table from an arrow table.

    The order is x <= y iff the cell (x, y) is {unit}.  Validation is
    structural: the relation must be a partial order with the unit on
    top, cells below the diagonal must be singletons, and those
    singletons must agree with the pseudocomplements recomputed from
    the rebuilt order.
    """
    n, arrow = A.n, A.arrow
    unit_cell = frozenset((A.unit,))
    up = [0] * n
    for x in range(n):
        for y in range(n):
            if arrow[x][y] == unit_cell:
                up[x] |= 1 << y
    for x in range(n):
        if not up[x] >> x & 1:
            raise OrderAxiomFailure(f"relation is not reflexive at {A.labels[x]}")
    for x in range(n):
        for y in iter_bits(up[x]):
            if x != y and up[y] >> x & 1:
                raise OrderAxiomFailure(
                    f"relation is not antisymmetric at ({A.labels[x]},{A.labels[y]})"
                )
            missing = up[y] & ~up[x]
            if missing:
                k = next(iter_bits(missing))
                raise OrderAxiomFailure(
                    f"relation is not transitive at "
                    f"({A.labels[x]},{A.labels[y]},{A.labels[k]})"
                )
        if not up[x] >> A.unit & 1:
            raise OrderAxiomFailure(f"unit is not above {A.labels[x]}")
    P = Poset(A.labels, up, validate=False)
    entries: dict[tuple[int, int], int] = {}
    for x in range(n):
        for y in iter_bits(P.down[x]):
            cell = arrow[x][y]
            if len(cell) != 1:
                raise NonSingletonSection(
                    f"cell ({A.labels[x]},{A.labels[y]}) must be a singleton"
                )
            entries[(x, y)] = next(iter(cell))
    for (x, y), z in entries.items():
        recomputed = section_pseudocomplement(P, x, y)
        if recomputed != z:
            raise SectionMismatch(
                f"cell ({A.labels[x]},{A.labels[y]}) = {A.labels[z]} but the "
                f"induced order gives "
                f"{'nothing' if recomputed is None else A.labels[recomputed]}"
            )
    return P, SectionTable(P, entries)


def roundtrip_check(obj, all_witnesses: bool = False) -> CheckReport:
    """Certify the double translation returns the original structure.

    Accepts either a poset with pseudocomplemented sections or an
    algebra that passes the axioms; equality is label-preserving.
    """
    if isinstance(obj, Poset):
        return _roundtrip_poset(obj, all_witnesses)
    if isinstance(obj, IAlgebra):
        return _roundtrip_algebra(obj, all_witnesses)
    raise TypeError(f"expected Poset or IAlgebra, got {type(obj).__name__}")


def _roundtrip_poset(P: Poset, all_witnesses: bool) -> CheckReport:
    table = section_table(P)
    back, back_table = poset_of(algebra_of(P))
    report = CheckReport("poset-roundtrip")

    def order():
        for x in range(P.n):
            for y in range(P.n):
                if P.le(x, y) != back.le(x, y):
                    yield (x, y)

    def sections():
        keys = set(table.entries) | set(back_table.entries)
        for x, y in sorted(keys):
            if table.get(x, y) != back_table.get(x, y):
                yield (x, y)

    report.run_law("labels", iter(()) if back.labels == P.labels else iter([()]),
                   lambda w: (), all_witnesses)
    report.run_law("order", order(), P.labels_of, all_witnesses)
    report.run_law("sections", sections(), P.labels_of, all_witnesses)
    return report


def _roundtrip_algebra(A: IAlgebra, all_witnesses: bool) -> CheckReport:
    P, _ = poset_of(A)
    back = algebra_of(P)
    report = CheckReport("algebra-roundtrip")

    def to_labels(w):
        return tuple(A.labels[i] for i in w)

    def unit():
        if back.unit != A.unit:
            yield (A.unit,)

    def arrow():
        for x in range(A.n):
            for y in range(A.n):
                if back.arrow[x][y] != A.arrow[x][y]:
                    yield (x, y)

    report.run_law("labels", iter(()) if back.labels == A.labels else iter([()]),
                   lambda w: (), all_witnesses)
    report.run_law("unit", unit(), to_labels, all_witnesses)
    report.run_law("arrow", arrow(), to_labels, all_witnesses)
    return report
