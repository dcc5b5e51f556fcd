"""Bound entanglement and its activation.

A family member is bound entangled when at least one splitting is
inseparable yet no pair of separated parties can distill anything.  Two
activation mechanisms are modelled: parties joining into groups (which
shrinks the set of relevant splittings) and mixing different bound
entangled states (classical communication only), where the one-parameter
subfamily below guarantees that inseparable splittings accumulate: the
mixture is inseparable wherever at least one ingredient was.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .classify import classify, classify_under_grouping
from .family import GhzDiagonalState, n_sectors
from .partitions import (
    BipartiteSplitting,
    PartyGrouping,
    enumerate_groupings,
    relabel_splitting,
)


@dataclass(frozen=True)
class InseparableSet:
    """Choice of splittings meant to come out inseparable (s_k = 1).

    Must be a nonempty proper subset of all splittings: the subfamily
    construction needs at least one separable splitting.
    """

    n_parties: int
    inseparable: frozenset

    def __post_init__(self):
        total = n_sectors(self.n_parties)
        ks = frozenset(int(k) for k in self.inseparable)
        if not ks:
            raise ValueError("at least one splitting must be inseparable")
        if any(k < 1 or k > total for k in ks):
            raise ValueError("splitting chain value out of range")
        if len(ks) == total:
            raise ValueError("at least one splitting must stay separable")
        object.__setattr__(self, "inseparable", ks)

    @property
    def n_separable(self):
        return n_sectors(self.n_parties) - len(self.inseparable)


def subfamily_state(ins):
    """The one-parameter subfamily member realizing a chosen signature.

    With s separable splittings and delta = 1/(s+1): lambda0+ = delta,
    lambda0- = 0, lambda_k = 0 on the inseparable splittings and delta/2 on
    the separable ones.  The s-vector of the result is exactly the given
    set, and mixtures of such states obey the accumulation rule tested in
    the suite.
    """
    n = ins.n_parties
    delta = 1.0 / (ins.n_separable + 1)
    lam = tuple(
        0.0 if k in ins.inseparable else 0.5 * delta
        for k in range(1, n_sectors(n) + 1)
    )
    return GhzDiagonalState(n, delta, 0.0, lam)


def mix(states, weights=None):
    """Coefficient-wise convex mixture; uniform when weights are omitted.

    The accumulation guarantee (mixture inseparable wherever any
    ingredient was) holds for uniform mixtures of subfamily states.
    """
    states = list(states)
    if not states:
        raise ValueError("need at least one state")
    n = states[0].n_parties
    if any(s.n_parties != n for s in states):
        raise ValueError("states have different party counts")
    if weights is None:
        weights = [1.0] * len(states)
    else:
        weights = [float(w) for w in weights]
        if len(weights) != len(states):
            raise ValueError("one weight per state required")
        if any(w < 0.0 for w in weights) or not any(weights):
            raise ValueError("weights must be non-negative and not all zero")
    total = math.fsum(weights)

    def avg(values):
        return math.fsum(w * v for w, v in zip(weights, values)) / total

    return GhzDiagonalState(
        n,
        avg([s.lambda0_plus for s in states]),
        avg([s.lambda0_minus for s in states]),
        tuple(avg([s.lam[i] for s in states]) for i in range(n_sectors(n))),
    )


def permute_parties(state, perm):
    """Relabel party n as perm[n-1].

    Complement pairs of basis strings map to complement pairs, so each
    degenerate sector lands on another sector with its +- labels intact;
    the extreme pair (k = 0) is fixed.  The s-vector transforms exactly as
    the splittings do under the same relabeling.
    """
    n = state.n_parties
    new_lam = [0.0] * n_sectors(n)
    for k in range(1, n_sectors(n) + 1):
        image = relabel_splitting(BipartiteSplitting(n, k), perm)
        new_lam[image.k - 1] = state.lam[k - 1]
    return GhzDiagonalState(n, state.lambda0_plus, state.lambda0_minus, tuple(new_lam))


def _popcount_sectors(n_parties, sizes):
    """Splittings whose smaller/larger side sizes fall in ``sizes`` (side-B popcount)."""
    return frozenset(
        k for k in range(1, n_sectors(n_parties) + 1) if bin(k).count("1") in sizes
    )


def example_i_state(n_parties, j):
    """Bound entangled state that activates only for group sizes j and N-j.

    Inseparable exactly across the splittings with j (or N-j) parties on
    one side, so joining into two groups of those sizes is the only
    arrangement that distills, regardless of which parties join.
    """
    if not 1 <= j < n_parties:
        raise ValueError("j must satisfy 1 <= j < N")
    ins = _popcount_sectors(n_parties, {j, n_parties - j})
    return subfamily_state(InseparableSet(n_parties, ins))


def example_ii_state(n_parties, parties):
    """Bound entangled state that activates only for one specific two-group split."""
    parties = frozenset(int(p) for p in parties)
    if not parties or any(p < 1 or p > n_parties for p in parties):
        raise ValueError("parties must be a nonempty subset of 1..N")
    if len(parties) == n_parties:
        raise ValueError("parties must be a proper subset")
    side_b = parties if n_parties not in parties else frozenset(range(1, n_parties + 1)) - parties
    k = 0
    for party in range(1, n_parties):
        k = (k << 1) | (1 if party in side_b else 0)
    return subfamily_state(InseparableSet(n_parties, frozenset({k})))


def example_iii_state():
    """Four-party bound entangled state unlocked by joining parties 3 and 4.

    Inseparable across (A1A2)-(A3A4), (A1)-rest and (A2)-rest; once parties
    3 and 4 act together, a GHZ-like state among A1, A2 and the joined pair
    becomes distillable, while any other single join activates nothing.
    """
    chains = (
        BipartiteSplitting.from_chain("110").k,
        BipartiteSplitting.from_chain("100").k,
        BipartiteSplitting.from_chain("010").k,
    )
    return subfamily_state(InseparableSet(4, frozenset(chains)))


def superactivation_example_1(n_parties):
    """N/2 bound entangled states whose full collection unlocks a GHZ state.

    State number k is inseparable exactly across the splittings with k (or
    N-k) parties on one side.  Every state alone, and every proper
    sub-collection, distills nothing; mixing all of them covers every
    splitting.
    """
    if n_parties < 4 or n_parties % 2:
        raise ValueError("n_parties must be even and at least 4")
    states = []
    for size in range(1, n_parties // 2 + 1):
        ins = _popcount_sectors(n_parties, {size, n_parties - size})
        states.append(subfamily_state(InseparableSet(n_parties, ins)))
    return states


def superactivation_example_2(n_parties):
    """N bound entangled states in which the last acts as a key.

    For l < N, state l is inseparable across the splittings placing
    parties l and N on different sides, except the two single-party
    splittings A_l-rest and A_N-rest.  The key state is inseparable across
    all 1-vs-(N-1) splittings.  Mixing the key with state l makes the pair
    (A_l, A_N) distillable; all non-key states together distill nothing;
    the full collection unlocks a GHZ state.
    """
    if n_parties < 3:
        raise ValueError("n_parties must be at least 3")
    if n_parties == 3:
        # Every splitting of three parties is 1-vs-2, so the non-key sets
        # are empty and the key set is everything: no valid subfamily
        # members exist.
        raise ValueError("the key-state construction degenerates for 3 parties")
    everyone_but_last = frozenset(range(1, n_parties))
    states = []
    for l in range(1, n_parties):
        ins = set()
        for k in range(1, n_sectors(n_parties) + 1):
            side_b = BipartiteSplitting(n_parties, k).side_b()
            if l in side_b and side_b != {l} and side_b != everyone_but_last:
                ins.add(k)
        states.append(subfamily_state(InseparableSet(n_parties, frozenset(ins))))
    key = _popcount_sectors(n_parties, {1, n_parties - 1})
    states.append(subfamily_state(InseparableSet(n_parties, key)))
    return states


@dataclass(frozen=True)
class Scenario:
    """A catalog of shared family states, optionally with a fixed grouping."""

    states: tuple
    grouping: PartyGrouping = None
    labels: tuple = None

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("a scenario needs at least one state")
        n = states[0].n_parties
        if any(s.n_parties != n for s in states):
            raise ValueError("states have different party counts")
        if self.grouping is not None and self.grouping.n_parties != n:
            raise ValueError("grouping party count differs from the states")
        labels = self.labels or tuple(f"state-{i}" for i in range(1, len(states) + 1))
        if len(labels) != len(states):
            raise ValueError("one label per state required")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "labels", tuple(labels))

    @property
    def n_parties(self):
        return self.states[0].n_parties


def scenario_survey(scenario, max_parties_for_groupings=6):
    """Mixing and grouping sweep over a scenario.

    Every nonempty sub-collection of the catalog is mixed uniformly and
    classified; for small systems the full mixture is additionally
    classified under every grouping with at least two groups.
    """
    n = scenario.n_parties
    subsets = []
    for size in range(1, len(scenario.states) + 1):
        for indices in combinations(range(len(scenario.states)), size):
            mixture = mix([scenario.states[i] for i in indices])
            cls = classify(mixture)
            subsets.append(
                {
                    "labels": tuple(scenario.labels[i] for i in indices),
                    "ghz_distillable": cls.ghz_distillable,
                    "bound_entangled": cls.bound_entangled,
                    "fully_separable": cls.fully_separable,
                    "distillable_pairs": tuple(
                        pair for pair, ok in sorted(cls.pairwise_distillable.items()) if ok
                    ),
                }
            )
    full_mixture = mix(list(scenario.states))
    groupings = []
    if n <= max_parties_for_groupings:
        for grouping in enumerate_groupings(n, min_groups=2):
            grouped = classify_under_grouping(full_mixture, grouping)
            groupings.append(
                {
                    "grouping": str(grouping),
                    "n_groups": grouping.n_groups,
                    "ghz_distillable": grouped.ghz_distillable,
                    "distillable_group_pairs": tuple(
                        pair
                        for pair, ok in sorted(grouped.pairwise_distillable.items())
                        if ok
                    ),
                }
            )
    fixed = None
    if scenario.grouping is not None:
        grouped = classify_under_grouping(full_mixture, scenario.grouping)
        fixed = {
            "grouping": str(scenario.grouping),
            "ghz_distillable": grouped.ghz_distillable,
            "distillable_group_pairs": tuple(
                pair for pair, ok in sorted(grouped.pairwise_distillable.items()) if ok
            ),
        }
    return {
        "n_parties": n,
        "subsets": subsets,
        "groupings": groupings,
        "fixed_grouping": fixed,
    }
