"""Bipartite splittings and party groupings of N labelled parties.

A splitting P_k is stored as the integer value of its (N-1)-bit chain
k_1..k_{N-1}: bit k_n is 0 when party n sits in the same group as party N.
Party N therefore always belongs to side A, and the chain "01" for three
parties means (A1A3)-(A2).
"""

from dataclasses import dataclass


def chain_string(k, n_parties):
    return format(k, "0{}b".format(n_parties - 1))


@dataclass(frozen=True)
class BipartiteSplitting:
    n_parties: int
    k: int

    def __post_init__(self):
        if self.n_parties < 2:
            raise ValueError("a splitting needs at least two parties")
        if not 0 <= self.k < 2 ** (self.n_parties - 1):
            raise ValueError(f"chain value {self.k} out of range for N={self.n_parties}")

    @classmethod
    def from_chain(cls, chain):
        if not chain or any(c not in "01" for c in chain):
            raise ValueError(f"invalid bit chain {chain!r}")
        return cls(len(chain) + 1, int(chain, 2))

    @property
    def chain(self):
        return chain_string(self.k, self.n_parties)

    @property
    def is_trivial(self):
        return self.k == 0

    def bit(self, party):
        """Chain bit k_n for party n (1-based, n < N)."""
        if not 1 <= party < self.n_parties:
            raise ValueError("chain bits are indexed 1..N-1")
        return (self.k >> (self.n_parties - 1 - party)) & 1

    def side_b(self):
        """Parties separated from party N (chain bit 1)."""
        return frozenset(n for n in range(1, self.n_parties) if self.bit(n))

    def side_a(self):
        """Parties grouped with party N (chain bit 0), plus party N."""
        return frozenset(range(1, self.n_parties + 1)) - self.side_b()

    def sides(self):
        """(A, B) with N in A; rejects the degenerate all-zero chain."""
        if self.k == 0:
            raise ValueError("the all-zero chain is not a proper splitting")
        return self.side_a(), self.side_b()

    def __str__(self):
        return self.chain


@dataclass(frozen=True)
class PartyGrouping:
    """Partition of parties 1..N into disjoint nonempty groups."""

    n_parties: int
    groups: tuple

    def __post_init__(self):
        groups = tuple(frozenset(int(p) for p in g) for g in self.groups)
        if not groups or any(not g for g in groups):
            raise ValueError("groups must be nonempty")
        parties = sorted(p for g in groups for p in g)
        if parties != list(range(1, self.n_parties + 1)):
            raise ValueError("groups must partition 1..N exactly")
        object.__setattr__(self, "groups", tuple(sorted(groups, key=min)))

    @classmethod
    def singletons(cls, n_parties):
        return cls(n_parties, tuple((p,) for p in range(1, n_parties + 1)))

    @property
    def n_groups(self):
        return len(self.groups)

    def group_of(self, party):
        for g in self.groups:
            if party in g:
                return g
        raise ValueError(f"party {party} is not in this grouping")

    def refines(self, other):
        """True when every group of self lies inside a group of ``other``."""
        if self.n_parties != other.n_parties:
            raise ValueError("party counts differ")
        return all(g <= other.group_of(min(g)) for g in self.groups)

    def __str__(self):
        return "-".join(
            "(" + "".join(f"A{p}" for p in sorted(g)) + ")" for g in self.groups
        )


def splitting_from_groups(grouping):
    """Encode a two-group grouping as its bit chain."""
    if grouping.n_groups != 2:
        raise ValueError("exactly two groups are required")
    n = grouping.n_parties
    with_last = grouping.group_of(n)
    k = 0
    for party in range(1, n):
        k = (k << 1) | (0 if party in with_last else 1)
    return BipartiteSplitting(n, k)


def sides_of(splitting):
    """The two sides (A, B) of a proper splitting, with party N in A."""
    return splitting.sides()


def enumerate_splittings(n_parties):
    """All 2**(N-1) - 1 proper bipartite splittings, ordered by chain value."""
    if n_parties < 2:
        raise ValueError("need at least two parties")
    return [BipartiteSplitting(n_parties, k) for k in range(1, 2 ** (n_parties - 1))]


def contains(splitting, grouping):
    """True when every group of ``grouping`` lies wholly on one side."""
    if splitting.n_parties != grouping.n_parties:
        raise ValueError("party counts differ")
    side_b = splitting.side_b()
    return all(g <= side_b or g.isdisjoint(side_b) for g in grouping.groups)


def splittings_separating(c, d, n_parties):
    """All splittings with ``c`` entirely on one side and ``d`` on the other."""
    c = frozenset(int(p) for p in c)
    d = frozenset(int(p) for p in d)
    if not c or not d:
        raise ValueError("both party sets must be nonempty")
    if c & d:
        raise ValueError(f"party sets overlap: {sorted(c & d)}")
    if any(p < 1 or p > n_parties for p in c | d):
        raise ValueError("party index out of range")
    out = []
    for p in enumerate_splittings(n_parties):
        a, b = p.side_a(), p.side_b()
        if (c <= a and d <= b) or (c <= b and d <= a):
            out.append(p)
    return out


def splittings_compatible_with(grouping):
    """All splittings that keep every group of ``grouping`` intact."""
    return [p for p in enumerate_splittings(grouping.n_parties) if contains(p, grouping)]


def _permutation_map(perm, n_parties):
    images = [int(p) for p in perm]
    if sorted(images) != list(range(1, n_parties + 1)):
        raise ValueError("perm must be a permutation of 1..N")
    return {party: images[party - 1] for party in range(1, n_parties + 1)}


def relabel_splitting(splitting, perm):
    """The splitting after renaming party n to perm[n-1].

    The chain is recomputed relative to the new party N: if the image of
    side B captures party N, the complement becomes the new side B.
    """
    n = splitting.n_parties
    mapping = _permutation_map(perm, n)
    new_b = frozenset(mapping[p] for p in splitting.side_b())
    if n in new_b:
        new_b = frozenset(range(1, n + 1)) - new_b
    k = 0
    for party in range(1, n):
        k = (k << 1) | (1 if party in new_b else 0)
    return BipartiteSplitting(n, k)


def enumerate_groupings(n_parties, min_groups=1, max_groups=None):
    """All set partitions of parties 1..N, in a deterministic order."""
    if n_parties < 1:
        raise ValueError("need at least one party")
    if max_groups is None:
        max_groups = n_parties
    out = []

    def place(party, groups):
        if party > n_parties:
            if min_groups <= len(groups) <= max_groups:
                out.append(PartyGrouping(n_parties, tuple(tuple(g) for g in groups)))
            return
        for g in groups:
            g.append(party)
            place(party + 1, groups)
            g.pop()
        groups.append([party])
        place(party + 1, groups)
        groups.pop()

    place(1, [])
    return out
