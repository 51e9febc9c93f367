import itertools

import pytest

from hspecies.bicompositions import (
    Bicomposition,
    Bipart,
    canonical_rep,
    enumerate_bicompositions,
    from_bicomposition,
    is_canonical,
    merge_biparts,
    parse_bicomposition,
    to_bicomposition,
)
from hspecies.combinatorics import act, enumerate_signed_set_compositions, parse_signed_composition, permutation

B = parse_bicomposition
S = parse_signed_composition


def brute_force_bicompositions(n):
    """Every list of nonzero pairs summing to n, found by filtering all short lists."""
    pairs = [(a, b) for a in range(n + 1) for b in range(n + 1) if 0 < a + b <= n]
    out = set()
    for k in range(n + 1):
        for seq in itertools.product(pairs, repeat=k):
            if sum(a + b for a, b in seq) == n:
                out.add(Bicomposition.of(*seq))
    return out


def orbit_classes(n):
    """S_n-orbits of signed set compositions, by applying every permutation."""
    perms = [permutation(p) for p in itertools.permutations(range(1, n + 1))]
    seen, classes = set(), []
    for x in enumerate_signed_set_compositions(n):
        if x in seen:
            continue
        orbit = {act(p, x) for p in perms}
        seen |= orbit
        classes.append(orbit)
    return classes


def test_bipart_rejects_zero():
    with pytest.raises(ValueError):
        Bipart(0, 0)
    with pytest.raises(ValueError):
        Bipart(-1, 2)


def test_degree_two_list():
    expected = {B(t) for t in ["2/0", "1/0|1/0", "1/1", "1/0|0/1", "0/1|1/0", "0/1|0/1", "0/2"]}
    got = enumerate_bicompositions(2)
    assert len(got) == 7 and set(got) == expected


def test_degree_zero():
    assert enumerate_bicompositions(0) == (Bicomposition(()),)


@pytest.mark.parametrize("n", range(0, 5))
def test_enumeration_matches_brute_force(n):
    got = enumerate_bicompositions(n)
    assert len(got) == len(set(got))
    assert set(got) == brute_force_bicompositions(n)


def test_degree_four_count_and_recurrence():
    d = [len(enumerate_bicompositions(n)) for n in range(9)]
    assert d[:5] == [1, 2, 7, 24, 82]
    for n in range(3, 9):
        assert d[n] == 4 * d[n - 1] - 2 * d[n - 2]


def test_to_bicomposition_examples():
    assert to_bicomposition(S("1 2|-3")) == B("0/2|1/0")
    assert to_bicomposition(S("-1")) == B("1/0")
    assert to_bicomposition(S("1")) == B("0/1")
    assert to_bicomposition(S("-1 2|-3")) == B("1/1|1/0")


def test_from_bicomposition_examples():
    assert from_bicomposition(B("0/2|1/0")) == S("1 2|-3")
    assert from_bicomposition(B("()")) == S("()")
    assert from_bicomposition(B("1/1")) == S("-1 2")


def test_canonical_rep_examples():
    assert canonical_rep(S("-2 1|-3")) == S("-1 2|-3")
    assert canonical_rep(S("2 3|-1")) == S("1 2|-3")
    x = S("-1 2|-3")
    assert canonical_rep(x) == x


def test_orbit_class_example():
    members = ["-1 2|-3", "-2 1|-3", "-1 3|-2", "-3 1|-2", "-2 3|-1", "-3 2|-1"]
    assert {canonical_rep(S(m)) for m in members} == {S("-1 2|-3")}
    assert {to_bicomposition(S(m)) for m in ["1 2|-3", "1 3|-2", "2 3|-1"]} == {B("0/2|1/0")}


def test_merge_biparts():
    assert merge_biparts(Bipart(2, 0), Bipart(1, 0)) == Bipart(3, 0)
    assert Bipart(1, 0) + Bipart(0, 1) == Bipart(1, 1)


@pytest.mark.parametrize("n", range(0, 5))
def test_orbits_biject_with_bicompositions(n):
    classes = orbit_classes(n)
    assert len(classes) == len(enumerate_bicompositions(n))
    for orbit in classes:
        assert len({to_bicomposition(x) for x in orbit}) == 1
        assert len({canonical_rep(x) for x in orbit}) == 1
        rep = canonical_rep(next(iter(orbit)))
        assert rep in orbit
        assert is_canonical(rep)
    assert {to_bicomposition(next(iter(o))) for o in classes} == set(enumerate_bicompositions(n))


@pytest.mark.parametrize("n", range(0, 6))
def test_round_trip(n):
    for b in enumerate_bicompositions(n):
        x = from_bicomposition(b)
        assert to_bicomposition(x) == b
        assert x.degree == b.degree == n
        assert is_canonical(x)


def test_verbal_rule_agrees_with_construction():
    for x in enumerate_signed_set_compositions(3):
        assert is_canonical(x) == (canonical_rep(x) == x)


def test_text_format():
    for text in ["0/2|1/0", "()", "1/1"]:
        assert str(B(text)) == text
    assert B("0/2|1/0").to_json() == [[0, 2], [1, 0]]
    with pytest.raises(ValueError):
        B("0/0")
    with pytest.raises(ValueError):
        B("1-2")
