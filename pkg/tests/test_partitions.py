"""Tests for splitting and grouping combinatorics."""

import pytest

from ghzkit.partitions import (
    BipartiteSplitting,
    PartyGrouping,
    contains,
    enumerate_groupings,
    enumerate_splittings,
    relabel_splitting,
    sides_of,
    splitting_from_groups,
    splittings_compatible_with,
    splittings_separating,
)


def test_three_party_chain_encoding():
    # (A1A3)-(A2) -> 01, (A2A3)-(A1) -> 10, (A3)-(A1A2) -> 11
    assert splitting_from_groups(PartyGrouping(3, ((1, 3), (2,)))).chain == "01"
    assert splitting_from_groups(PartyGrouping(3, ((2, 3), (1,)))).chain == "10"
    assert splitting_from_groups(PartyGrouping(3, ((3,), (1, 2)))).chain == "11"


def test_sides_of():
    a, b = sides_of(BipartiteSplitting.from_chain("01"))
    assert a == {1, 3} and b == {2}
    a, b = sides_of(BipartiteSplitting(2, 1))
    assert a == {2} and b == {1}


def test_trivial_chain_rejected():
    with pytest.raises(ValueError):
        sides_of(BipartiteSplitting(4, 0))


def test_enumerate_splittings():
    assert [p.chain for p in enumerate_splittings(3)] == ["01", "10", "11"]
    assert [p.chain for p in enumerate_splittings(2)] == ["1"]
    assert len(enumerate_splittings(5)) == 15
    with pytest.raises(ValueError):
        enumerate_splittings(1)


def test_round_trip_groups_to_chain():
    for n in (2, 3, 4, 5):
        for p in enumerate_splittings(n):
            a, b = sides_of(p)
            assert splitting_from_groups(PartyGrouping(n, (tuple(a), tuple(b)))) == p


def test_contains():
    p = splitting_from_groups(PartyGrouping(4, ((1, 2), (3, 4))))
    assert contains(p, PartyGrouping(4, ((1,), (2,), (3, 4))))
    assert not contains(p, PartyGrouping(4, ((1, 3), (2,), (4,))))
    g2 = PartyGrouping(4, ((1, 2), (3, 4)))
    assert contains(splitting_from_groups(g2), g2)
    with pytest.raises(ValueError):
        contains(p, PartyGrouping(3, ((1,), (2,), (3,))))


def test_separating_basic():
    # N=3, C={1}, D={2}: exhaustive filtering leaves 01 and 10 (party 3 free)
    chains = sorted(p.chain for p in splittings_separating({1}, {2}, 3))
    assert chains == ["01", "10"]
    assert [p.chain for p in splittings_separating({1}, {2}, 2)] == ["1"]
    only = splittings_separating({1, 2}, {3, 4}, 4)
    assert len(only) == 1 and sides_of(only[0])[1] == {1, 2}


def test_separating_count_formula():
    for n in range(2, 7):
        parties = list(range(1, n + 1))
        for c_size in range(1, n):
            for d_size in range(1, n - c_size + 1):
                c = set(parties[:c_size])
                d = set(parties[c_size:c_size + d_size])
                got = splittings_separating(c, d, n)
                assert len(got) == 2 ** (n - c_size - d_size)


def test_separating_argument_errors():
    with pytest.raises(ValueError):
        splittings_separating({1}, {1, 2}, 3)
    with pytest.raises(ValueError):
        splittings_separating(set(), {2}, 3)


def test_compatible_with():
    assert len(splittings_compatible_with(PartyGrouping.singletons(4))) == 7
    assert splittings_compatible_with(PartyGrouping(4, ((1, 2, 3, 4),))) == []
    got = splittings_compatible_with(PartyGrouping(4, ((1, 2), (3, 4))))
    assert [p.chain for p in got] == ["110"]


def test_compatible_count_formula():
    for n in (3, 4, 5):
        for g in enumerate_groupings(n):
            assert len(splittings_compatible_with(g)) == 2 ** (g.n_groups - 1) - 1


def test_compatible_nesting_under_refinement():
    for g_coarse in enumerate_groupings(5, min_groups=2):
        compat_coarse = set(splittings_compatible_with(g_coarse))
        fine = PartyGrouping.singletons(5)
        assert fine.refines(g_coarse)
        assert compat_coarse <= set(splittings_compatible_with(fine))


def test_grouping_validation():
    with pytest.raises(ValueError):
        PartyGrouping(3, ((1, 2),))
    with pytest.raises(ValueError):
        PartyGrouping(3, ((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        PartyGrouping(3, ((1, 2), ()))


def test_grouping_rendering():
    assert str(PartyGrouping(3, ((2,), (1, 3)))) == "(A1A3)-(A2)"
    assert BipartiteSplitting.from_chain("101").chain == "101"


def test_relabel_splitting():
    # identity
    p = BipartiteSplitting.from_chain("10")
    assert relabel_splitting(p, (1, 2, 3)) == p
    # cycle 1->2->3->1 maps (A1)-(A2A3) onto (A2)-(A1A3)
    assert relabel_splitting(p, (2, 3, 1)).chain == "01"
    # a 2-cycle applied twice is the identity
    for chain in ("01", "10", "11"):
        q = BipartiteSplitting.from_chain(chain)
        assert relabel_splitting(relabel_splitting(q, (2, 1, 3)), (2, 1, 3)) == q
    with pytest.raises(ValueError):
        relabel_splitting(p, (1, 1, 3))


def test_relabel_matches_side_sets():
    perm = (3, 1, 4, 2)
    mapping = {i + 1: perm[i] for i in range(4)}
    for p in enumerate_splittings(4):
        image = relabel_splitting(p, perm)
        new_groups = {frozenset(mapping[x] for x in p.side_a()),
                      frozenset(mapping[x] for x in p.side_b())}
        assert {image.side_a(), image.side_b()} == new_groups


def test_enumerate_groupings_counts():
    # Bell numbers 1, 2, 5, 15, 52
    for n, bell in ((1, 1), (2, 2), (3, 5), (4, 15), (5, 52)):
        assert len(enumerate_groupings(n)) == bell
    assert all(g.n_groups >= 2 for g in enumerate_groupings(4, min_groups=2))
