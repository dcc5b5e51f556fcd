"""Exact separability and distillability verdicts for family members.

For a family member every bipartite splitting P_k is either separable
(s_k = 0) or distillable (s_k = 1); there is no third state.  A maximally
entangled pair between two disjoint party sets is distillable exactly when
every splitting separating them carries s_k = 1, and a GHZ state shared by
all parties is distillable exactly when every s_k = 1.
"""

from dataclasses import dataclass
from enum import Enum

from .family import s_vector
from .partitions import (
    PartyGrouping,
    contains,
    enumerate_splittings,
    splittings_compatible_with,
    splittings_separating,
)


class Verdict(Enum):
    SEPARABLE = "separable"
    DISTILLABLE = "distillable"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EntanglementClassification:
    n_parties: int
    s: object
    verdicts: dict            # splitting chain value -> Verdict
    fully_separable: bool
    ghz_distillable: bool
    bound_entangled: bool
    pairwise_distillable: dict  # (i, j) with i < j -> bool


@dataclass(frozen=True)
class GroupedClassification:
    """Classification of a family member viewed as a system of joined groups."""

    grouping: PartyGrouping
    group_order: tuple        # frozensets; the group holding party N comes last
    verdicts: dict            # group-level chain value -> (original splitting, Verdict)
    pairwise_distillable: dict  # (i, j) 1-based indices into group_order -> bool
    fully_separable: bool
    ghz_distillable: bool
    bound_entangled: bool


def can_distill_pair(state, c, d, grouping=None):
    """Whether a maximally entangled pair between ``c`` and ``d`` is distillable.

    The remaining parties stay mutually separated; when ``grouping`` is
    given they stay in their groups instead, which restricts the relevant
    splittings to the ones compatible with the grouping.
    """
    s = s_vector(state)
    separating = splittings_separating(c, d, state.n_parties)
    if grouping is not None:
        if grouping.n_parties != state.n_parties:
            raise ValueError("party counts differ")
        separating = [p for p in separating if contains(p, grouping)]
        if not separating:
            raise ValueError("no compatible splitting separates the two sets")
    return all(s.s(p.k) == 1 for p in separating)


def can_distill_ghz(state):
    """True when a GHZ state shared by all parties is distillable (all s_k = 1)."""
    return s_vector(state).all_one


def is_l_separable(state, grouping):
    """Separability of the state viewed as one party per group.

    Holds exactly when every bipartite splitting compatible with the
    grouping is separable.
    """
    if grouping.n_parties != state.n_parties:
        raise ValueError("party counts differ")
    s = s_vector(state)
    return all(s.s(p.k) == 0 for p in splittings_compatible_with(grouping))


def is_bound_entangled(state):
    """Entangled, yet no pair of separated parties can distill anything."""
    s = s_vector(state)
    if s.all_zero:
        return False
    n = state.n_parties
    return not any(
        can_distill_pair(state, {i}, {j})
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    )


def classify(state):
    """Full per-splitting and pairwise classification of a family member."""
    n = state.n_parties
    s = s_vector(state)
    verdicts = {
        p.k: Verdict.DISTILLABLE if s.s(p.k) else Verdict.SEPARABLE
        for p in enumerate_splittings(n)
    }
    pairwise = {
        (i, j): can_distill_pair(state, {i}, {j})
        for i in range(1, n)
        for j in range(i + 1, n + 1)
    }
    entangled = not s.all_zero
    return EntanglementClassification(
        n_parties=n,
        s=s,
        verdicts=verdicts,
        fully_separable=not entangled,
        ghz_distillable=s.all_one,
        bound_entangled=entangled and not any(pairwise.values()),
        pairwise_distillable=pairwise,
    )


def classify_under_grouping(state, grouping):
    """Classification after the parties of each group join forces.

    Only splittings compatible with the grouping remain meaningful; they
    are reindexed as splittings of the groups, with the group containing
    party N playing the reference role.  With all-singleton groups this
    reduces to :func:`classify`.
    """
    n = state.n_parties
    if grouping.n_parties != n:
        raise ValueError("party counts differ")
    s = s_vector(state)
    reference = grouping.group_of(n)
    others = [g for g in grouping.groups if g != reference]
    order = tuple(others) + (reference,)
    verdicts = {}
    for p in splittings_compatible_with(grouping):
        side_b = p.side_b()
        bits = 0
        for g in others:
            bits = (bits << 1) | (1 if g <= side_b else 0)
        verdicts[bits] = (p, Verdict.DISTILLABLE if s.s(p.k) else Verdict.SEPARABLE)
    pairwise = {}
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            pairwise[(i + 1, j + 1)] = can_distill_pair(
                state, order[i], order[j], grouping=grouping
            )
    entangled = any(v is Verdict.DISTILLABLE for _, v in verdicts.values())
    return GroupedClassification(
        grouping=grouping,
        group_order=order,
        verdicts=verdicts,
        pairwise_distillable=pairwise,
        fully_separable=not entangled,
        ghz_distillable=bool(verdicts) and all(
            v is Verdict.DISTILLABLE for _, v in verdicts.values()
        ),
        bound_entangled=entangled and not any(pairwise.values()),
    )


def report_lines(state, classification, lower_bound=False):
    """Human-readable classification report, one line per splitting."""
    from .partitions import chain_string

    n = classification.n_parties
    half = 0.5 * state.delta
    lines = [f"Delta = {state.delta:.4f}"]
    for k in sorted(classification.verdicts):
        verdict = classification.verdicts[k]
        lam = state.lambda_value(k)
        cmp = "<" if verdict is Verdict.DISTILLABLE else ">="
        lines.append(
            f"P_{chain_string(k, n)}: {verdict.value.upper():11s}"
            f" (lambda={lam:.4f} {cmp} Delta/2={half:.4f})"
        )
    lines.append("")
    qualifier = " (lower bound)" if lower_bound else ""
    lines.append(f"fully separable{qualifier}:  {_yn(classification.fully_separable)}")
    lines.append(f"GHZ-distillable{qualifier}:  {_yn(classification.ghz_distillable)}")
    lines.append(f"bound entangled{qualifier}:  {_yn(classification.bound_entangled)}")
    pairs = [f"A{i}-A{j}" for (i, j), ok in sorted(classification.pairwise_distillable.items()) if ok]
    lines.append("pairwise distillable: " + (", ".join(pairs) if pairs else "none"))
    return lines


def report_payload(state, classification):
    """Machine-readable mirror of :func:`report_lines`."""
    from .partitions import chain_string

    n = classification.n_parties
    return {
        "n_parties": n,
        "delta": state.delta,
        "splittings": [
            {
                "chain": chain_string(k, n),
                "verdict": classification.verdicts[k].value,
                "s": classification.s.s(k),
                "lambda": state.lambda_value(k),
            }
            for k in sorted(classification.verdicts)
        ],
        "fully_separable": classification.fully_separable,
        "ghz_distillable": classification.ghz_distillable,
        "bound_entangled": classification.bound_entangled,
        "pairwise_distillable": {
            f"A{i}-A{j}": ok
            for (i, j), ok in sorted(classification.pairwise_distillable.items())
        },
    }


def _yn(flag):
    return "YES" if flag else "no"
