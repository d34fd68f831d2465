"""Finite partial orders stored as fully closed bitmask incidence rows.

Elements are dense indices 0..n-1; labels matter only at I/O
boundaries.  Row ``up[i]`` holds the whole upper cone of ``i`` as a
bitmask (bit j set iff i <= j) and ``down[i]`` the lower cone, so
cones, extremal elements and pairwise bounds each cost a handful of
integer operations.  Posets are immutable and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import (
    CycleDetected,
    DuplicateLabel,
    NoTopElement,
    NotAntisymmetric,
    NotTransitive,
    UnknownLabel,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset over labelled elements.

    ``up`` must already be reflexive and transitively closed;
    construction re-checks the order axioms unless ``validate=False``
    (reserved for internal callers that build closed relations by
    construction, e.g. the corpus enumerator).
    """

    __slots__ = ("n", "labels", "up", "down", "full", "top", "bottom", "_index")

    def __init__(self, labels: Iterable[str], up: Iterable[int], *, validate: bool = True):
        self.labels = tuple(labels)
        self.up = tuple(up)
        self.n = len(self.labels)
        if len(self.up) != self.n:
            raise ValueError("relation has a different size than the label list")
        self.full = (1 << self.n) - 1
        self._index = {}
        for i, lab in enumerate(self.labels):
            if not lab:
                raise ValueError("labels must be non-empty strings")
            if lab in self._index:
                raise DuplicateLabel(f"duplicate label {lab!r}")
            self._index[lab] = i
        down = [0] * self.n
        for i, row in enumerate(self.up):
            if row & ~self.full:
                raise ValueError(f"row {i} mentions out-of-range elements")
            for j in iter_bits(row):
                down[j] |= 1 << i
        self.down = tuple(down)
        if validate:
            self._validate()
        self.top = next((t for t in range(self.n) if self.down[t] == self.full), None)
        self.bottom = next((b for b in range(self.n) if self.up[b] == self.full), None)

    def _validate(self) -> None:
        for i in range(self.n):
            if not self.up[i] >> i & 1:
                raise ValueError(f"relation is not reflexive at {self.labels[i]}")
        for i in range(self.n):
            for j in iter_bits(self.up[i]):
                if i != j and self.up[j] >> i & 1:
                    raise NotAntisymmetric(
                        f"{self.labels[i]} <= {self.labels[j]} and conversely"
                    )
                missing = self.up[j] & ~self.up[i]
                if missing:
                    k = next(iter_bits(missing))
                    raise NotTransitive(
                        f"{self.labels[i]} <= {self.labels[j]} <= {self.labels[k]} "
                        f"but not {self.labels[i]} <= {self.labels[k]}"
                    )

    # -- identity ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poset({list(self.labels)!r}, covers={cover_relation(self)!r})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.up))

    # -- element bookkeeping ------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown label {label!r}") from None

    def mask_of(self, elems: Iterable[int]) -> int:
        m = 0
        for e in elems:
            if not 0 <= e < self.n:
                raise ValueError(f"element index {e} out of range")
            m |= 1 << e
        return m

    def set_of(self, mask: int) -> tuple[int, ...]:
        return tuple(iter_bits(mask))

    def labels_of(self, elems: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[e] for e in elems)

    # -- order queries -------------------------------------------------------

    def le(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.le(i, j)

    def lower_mask(self, mask: int) -> int:
        """Common lower cone of the elements in ``mask`` (whole carrier for the empty set)."""
        out = self.full
        for a in iter_bits(mask):
            out &= self.down[a]
        return out

    def upper_mask(self, mask: int) -> int:
        out = self.full
        for a in iter_bits(mask):
            out &= self.up[a]
        return out

    def min_mask(self, mask: int) -> int:
        out = 0
        for a in iter_bits(mask):
            if self.down[a] & mask == 1 << a:
                out |= 1 << a
        return out

    def max_mask(self, mask: int) -> int:
        out = 0
        for a in iter_bits(mask):
            if self.up[a] & mask == 1 << a:
                out |= 1 << a
        return out

    def greatest_of(self, mask: int) -> int | None:
        """The greatest element of the subset, if it has one."""
        m = self.max_mask(mask)
        if m and m == m & -m:
            return m.bit_length() - 1
        return None

    def least_of(self, mask: int) -> int | None:
        m = self.min_mask(mask)
        if m and m == m & -m:
            return m.bit_length() - 1
        return None

    def join(self, a: int, b: int) -> int | None:
        return self.least_of(self.up[a] & self.up[b])

    def meet(self, a: int, b: int) -> int | None:
        return self.greatest_of(self.down[a] & self.down[b])

    def covers(self) -> list[tuple[int, int]]:
        """Transitive reduction as (lower, upper) index pairs, lexicographic."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            for j in iter_bits(strict):
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((i, j))
        return out

    def restrict(self, elems: Iterable[int]) -> "Poset":
        """Induced subposet on the given elements (ascending index order)."""
        keep = sorted(set(elems))
        pos = {e: k for k, e in enumerate(keep)}
        up = []
        for e in keep:
            row = 0
            for f in iter_bits(self.up[e]):
                if f in pos:
                    row |= 1 << pos[f]
            up.append(row)
        return Poset((self.labels[e] for e in keep), up, validate=False)


# -- construction -------------------------------------------------------------


def _label_indices(labels: Sequence[str], pairs, what: str) -> list[tuple[int, int]]:
    index = {}
    for i, lab in enumerate(labels):
        if lab in index:
            raise DuplicateLabel(f"duplicate label {lab!r}")
        index[lab] = i
    out = []
    for low, high in pairs:
        if low not in index:
            raise UnknownLabel(f"unknown label {low!r} in {what}")
        if high not in index:
            raise UnknownLabel(f"unknown label {high!r} in {what}")
        out.append((index[low], index[high]))
    return out


def build_from_covers(labels: Sequence[str], covers) -> Poset:
    """Poset whose order is the reflexive-transitive closure of the cover pairs."""
    if not labels:
        raise ValueError("a poset needs at least one element")
    edges = _label_indices(labels, covers, "covers")
    n = len(labels)
    up = [1 << i for i in range(n)]
    for low, high in edges:
        up[low] |= 1 << high
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in iter_bits(acc):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in iter_bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise CycleDetected(
                    f"covers force {labels[i]} <= {labels[j]} and conversely"
                )
    return Poset(labels, up, validate=False)


def build_from_relation(labels: Sequence[str], pairs) -> Poset:
    """Poset from explicit <= pairs; only the reflexive closure is added.

    The relation is validated against antisymmetry and transitivity and
    rejected (rather than repaired) when either fails.
    """
    if not labels:
        raise ValueError("a poset needs at least one element")
    rel = _label_indices(labels, pairs, "relation")
    n = len(labels)
    up = [1 << i for i in range(n)]
    for low, high in rel:
        up[low] |= 1 << high
    for i in range(n):
        for j in iter_bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise NotAntisymmetric(f"{labels[i]} <= {labels[j]} and conversely")
            missing = up[j] & ~up[i]
            if missing:
                k = next(iter_bits(missing))
                raise NotTransitive(
                    f"{labels[i]} <= {labels[j]} <= {labels[k]} "
                    f"but not {labels[i]} <= {labels[k]}"
                )
    return Poset(labels, up, validate=False)


# -- elementary operations -----------------------------------------------------


def cone(P: Poset, elems: Iterable[int], direction: str) -> tuple[int, ...]:
    """Common lower or upper cone of a set of elements."""
    mask = P.mask_of(elems)
    if direction == "lower":
        return P.set_of(P.lower_mask(mask))
    if direction == "upper":
        return P.set_of(P.upper_mask(mask))
    raise ValueError(f"direction must be 'lower' or 'upper', got {direction!r}")


def extremes(P: Poset, elems: Iterable[int], direction: str) -> tuple[int, ...]:
    """Minimal or maximal elements of a set; empty only for the empty set."""
    mask = P.mask_of(elems)
    if direction == "min":
        return P.set_of(P.min_mask(mask))
    if direction == "max":
        return P.set_of(P.max_mask(mask))
    raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")


def section(P: Poset, y: int) -> tuple[int, ...]:
    """The interval [y, 1]: everything above y, in a poset with a top."""
    if P.top is None:
        raise NoTopElement("sections require a top element")
    return P.set_of(P.up[y])


def bound_of_pair(P: Poset, a: int, b: int, direction: str) -> int | None:
    """Least upper / greatest lower bound of a pair, or None when absent."""
    if direction == "join":
        return P.join(a, b)
    if direction == "meet":
        return P.meet(a, b)
    raise ValueError(f"direction must be 'join' or 'meet', got {direction!r}")


def is_lattice(P: Poset) -> bool:
    return all(
        P.join(a, b) is not None and P.meet(a, b) is not None
        for a in range(P.n)
        for b in range(a + 1, P.n)
    )


def cover_relation(P: Poset) -> list[tuple[str, str]]:
    """Transitive reduction as (lower, upper) label pairs."""
    return [(P.labels[i], P.labels[j]) for i, j in P.covers()]
