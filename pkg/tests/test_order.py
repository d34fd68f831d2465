import pytest
from hypothesis import given, settings, strategies as st

from unsharp import (
    CycleDetected,
    DuplicateLabel,
    NotAntisymmetric,
    NotTransitive,
    NoTopElement,
    UnknownLabel,
    bound_of_pair,
    build_from_covers,
    build_from_relation,
    cone,
    cover_relation,
    extremes,
    is_lattice,
    section,
)

from conftest import naive_lower, naive_max, naive_min, naive_upper


@st.composite
def posets(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    labels = [f"x{i}" for i in range(n)]
    pairs = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_from_covers(labels, covers)


def test_build_from_covers_pentagon(pentagon):
    b, c = pentagon.index("b"), pentagon.index("c")
    one = pentagon.index("1")
    assert pentagon.le(b, one)
    assert not pentagon.le(b, c)
    assert pentagon.top == one
    assert pentagon.bottom == pentagon.index("0")


def test_build_singleton():
    P = build_from_covers(["x"], [])
    assert P.n == 1 and P.le(0, 0) and P.top == 0 == P.bottom


def test_build_cycle_detected():
    with pytest.raises(CycleDetected):
        build_from_covers(["p", "q"], [("p", "q"), ("q", "p")])


def test_build_duplicate_and_unknown_labels():
    with pytest.raises(DuplicateLabel):
        build_from_covers(["p", "p"], [])
    with pytest.raises(UnknownLabel):
        build_from_covers(["p"], [("p", "q")])


def test_build_from_relation_matches_closure(crown):
    pairs = [
        (crown.labels[i], crown.labels[j])
        for i in range(crown.n)
        for j in range(crown.n)
        if i != j and crown.le(i, j)
    ]
    assert build_from_relation(crown.labels, pairs) == crown


def test_build_from_relation_antichain():
    P = build_from_relation(["a", "b", "c"], [])
    assert all(not P.le(i, j) for i in range(3) for j in range(3) if i != j)
    assert P.top is None and P.bottom is None


def test_build_from_relation_rejects_non_transitive():
    with pytest.raises(NotTransitive):
        build_from_relation(["a", "b", "c"], [("a", "b"), ("b", "c")])
    with pytest.raises(NotAntisymmetric):
        build_from_relation(["a", "b"], [("a", "b"), ("b", "a")])


def test_cone_examples(crown, crown_tail):
    a, b = crown.index("a"), crown.index("b")
    assert crown.labels_of(cone(crown, [a, b], "upper")) == ("c", "d", "1")
    d, e = crown_tail.index("d"), crown_tail.index("e")
    assert crown_tail.labels_of(cone(crown_tail, [d, e], "lower")) == ("0", "a", "b", "c")


def test_cone_of_top_and_empty(pentagon):
    top = pentagon.top
    assert cone(pentagon, [top], "lower") == tuple(range(pentagon.n))
    assert cone(pentagon, [], "lower") == tuple(range(pentagon.n))
    with pytest.raises(ValueError):
        cone(pentagon, [0], "sideways")


def test_extremes_examples(crown):
    cd1 = [crown.index(l) for l in "cd1"]
    assert crown.labels_of(extremes(crown, cd1, "min")) == ("c", "d")
    chain = [crown.index(l) for l in ("0", "a", "c")]
    assert crown.labels_of(extremes(crown, chain, "min")) == ("0",)
    antichain = [crown.index("a"), crown.index("b")]
    assert set(extremes(crown, antichain, "min")) == set(antichain)
    assert extremes(crown, [], "max") == ()


def test_section_examples(pentagon, crown_tail):
    assert pentagon.labels_of(section(pentagon, pentagon.index("b"))) == ("b", "1")
    assert pentagon.labels_of(section(pentagon, pentagon.top)) == ("1",)
    assert crown_tail.labels_of(section(crown_tail, crown_tail.index("c"))) == (
        "c", "d", "e", "1",
    )


def test_section_requires_top():
    P = build_from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
    with pytest.raises(NoTopElement):
        section(P, 0)


def test_bound_of_pair(pentagon, crown):
    a, b = crown.index("a"), crown.index("b")
    assert bound_of_pair(crown, a, b, "join") is None
    assert bound_of_pair(crown, a, crown.top, "join") == crown.top
    pa, pb = pentagon.index("a"), pentagon.index("b")
    assert bound_of_pair(pentagon, pa, pb, "join") == pentagon.top


def test_is_lattice(pentagon, crown):
    assert is_lattice(pentagon)
    assert not is_lattice(crown)
    chain = build_from_covers(["0", "m", "1"], [("0", "m"), ("m", "1")])
    assert is_lattice(chain)


def test_cover_relation_examples(pentagon):
    assert set(cover_relation(pentagon)) == {
        ("0", "a"), ("0", "b"), ("a", "c"), ("c", "1"), ("b", "1"),
    }
    antichain = build_from_relation(["a", "b"], [])
    assert cover_relation(antichain) == []
    chain = build_from_covers(["x", "y", "z"], [("x", "y"), ("y", "z")])
    assert set(cover_relation(chain)) == {("x", "y"), ("y", "z")}


def test_restrict(crown_tail):
    keep = [crown_tail.index(l) for l in ("0", "b", "c", "1")]
    sub = crown_tail.restrict(keep)
    assert sub.labels == ("0", "b", "c", "1")
    assert sub.le(sub.index("0"), sub.index("b"))
    assert not sub.le(sub.index("b"), sub.index("c"))


@settings(max_examples=150)
@given(posets())
def test_closure_reduction_round_trip(P):
    assert build_from_covers(P.labels, cover_relation(P)) == P


@settings(max_examples=100)
@given(posets(), st.data())
def test_cones_match_oracle(P, data):
    elems = data.draw(st.lists(st.integers(0, P.n - 1), max_size=P.n, unique=True))
    assert set(cone(P, elems, "lower")) == naive_lower(P, elems)
    assert set(cone(P, elems, "upper")) == naive_upper(P, elems)
    assert set(extremes(P, elems, "min")) == naive_min(P, elems)
    assert set(extremes(P, elems, "max")) == naive_max(P, elems)


@settings(max_examples=100)
@given(posets(), st.data())
def test_cone_antitone_and_galois(P, data):
    small = data.draw(st.lists(st.integers(0, P.n - 1), max_size=P.n, unique=True))
    extra = data.draw(st.lists(st.integers(0, P.n - 1), max_size=P.n, unique=True))
    big = sorted(set(small) | set(extra))
    assert set(cone(P, big, "lower")) <= set(cone(P, small, "lower"))
    assert set(cone(P, big, "upper")) <= set(cone(P, small, "upper"))
    # closure: A <= L(U(A)) and L(U(L(A))) = L(A)
    lower = cone(P, small, "lower")
    assert set(small) <= set(cone(P, cone(P, small, "upper"), "lower"))
    assert cone(P, cone(P, cone(P, small, "lower"), "upper"), "lower") == lower


@settings(max_examples=100)
@given(posets())
def test_lu_of_point_is_l(P):
    for a in range(P.n):
        assert cone(P, cone(P, [a], "upper"), "lower") == cone(P, [a], "lower")


@settings(max_examples=100)
@given(posets())
def test_min_of_upper_cone_nonempty_with_top(P):
    if P.top is None:
        return
    for x in range(P.n):
        for y in range(P.n):
            assert extremes(P, cone(P, [x, y], "upper"), "min") != ()
