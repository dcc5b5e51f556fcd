"""Measurement-based detection of multiparticle entanglement.

The recipe needs only the diagonal matrix elements in the computational
basis plus the single coherence between |0...0> and |1...1>: from these,
delta and the sector sums 2*lambda_k follow, and every strict inequality
2*lambda_k < delta certifies inseparability across the splitting P_k.
Experimental uncertainties are handled as plain worst-case intervals.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .family import GhzDiagonalState, ghz_basis_state, n_sectors
from .partitions import chain_string


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if math.isnan(lo) or math.isnan(hi) or lo > hi:
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x):
        return cls(x, x)

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self):
        return self.hi - self.lo

    def __str__(self):
        return f"[{self.lo:g}, {self.hi:g}]"


class Certification(Enum):
    ONE = "certified-1"
    ZERO = "certified-0"
    UNDETERMINED = "undetermined"

    def __str__(self):
        return self.value


def _check_unit_interval(interval, label):
    if interval.lo < 0.0 or interval.hi > 1.0:
        raise ValueError(f"{label} = {interval} must lie within [0, 1]")


@dataclass(frozen=True)
class MeasuredCoefficients:
    """Interval-valued coefficient data from an experiment.

    ``two_lambda`` bounds the sector sums 2*lambda_k; sectors without data
    default to the trivial bound [0, 1].  ``fidelity`` optionally carries a
    directly measured GHZ overlap.
    """

    n_parties: int
    lambda0_plus: Interval
    lambda0_minus: Interval
    two_lambda: dict
    fidelity: Interval = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.n_parties < 2:
            raise ValueError("need at least two parties")
        _check_unit_interval(self.lambda0_plus, "lambda0_plus")
        _check_unit_interval(self.lambda0_minus, "lambda0_minus")
        two_lambda = {}
        for key, interval in self.two_lambda.items():
            if isinstance(key, str):
                if len(key) != self.n_parties - 1 or any(c not in "01" for c in key):
                    raise ValueError(f"chain {key!r} must have {self.n_parties - 1} bits")
                key = int(key, 2)
            if not 1 <= key <= n_sectors(self.n_parties):
                raise ValueError(f"sector {key} out of range")
            _check_unit_interval(interval, f"two_lambda[{key}]")
            two_lambda[key] = interval
        object.__setattr__(self, "two_lambda", two_lambda)
        if self.fidelity is not None:
            _check_unit_interval(self.fidelity, "fidelity")

    @classmethod
    def from_state(cls, state, fidelity=None):
        """Zero-width intervals taken from an exact family member."""
        return cls(
            state.n_parties,
            Interval.point(state.lambda0_plus),
            Interval.point(state.lambda0_minus),
            {k: Interval.point(2.0 * state.lam[k - 1])
             for k in range(1, n_sectors(state.n_parties) + 1)},
            fidelity=Interval.point(fidelity) if fidelity is not None else None,
        )

    def two_lambda_bounds(self, k):
        return self.two_lambda.get(k, Interval(0.0, 1.0))


@dataclass(frozen=True)
class DetectionVerdict:
    n_parties: int
    delta: Interval
    certified: dict     # sector -> Certification
    margins: dict       # sector -> lo(delta) - hi(2*lambda_k)
    ghz_distillable_certified: bool
    notes: tuple

    def counts(self):
        one = sum(1 for c in self.certified.values() if c is Certification.ONE)
        zero = sum(1 for c in self.certified.values() if c is Certification.ZERO)
        return one, zero, len(self.certified) - one - zero


def detect(measured):
    """Certify the signature bits from interval data.

    delta is propagated by endpoint arithmetic and clamped at zero;
    s_k = 1 is certified when hi(2*lambda_k) < lo(delta), s_k = 0 when
    lo(2*lambda_k) >= hi(delta), anything else stays undetermined.
    """
    n = measured.n_parties
    delta = Interval(
        max(measured.lambda0_plus.lo - measured.lambda0_minus.hi, 0.0),
        max(measured.lambda0_plus.hi - measured.lambda0_minus.lo, 0.0),
    )
    certified, margins = {}, {}
    for k in range(1, n_sectors(n) + 1):
        bound = measured.two_lambda_bounds(k)
        margins[k] = delta.lo - bound.hi
        if bound.hi < delta.lo:
            certified[k] = Certification.ONE
        elif bound.lo >= delta.hi:
            certified[k] = Certification.ZERO
        else:
            certified[k] = Certification.UNDETERMINED
    notes = []
    if measured.fidelity is not None:
        threshold = fidelity_threshold_worst_case()
        if measured.fidelity.lo > threshold:
            notes.append(
                f"fidelity witness conclusive: F = {measured.fidelity} > 1/2"
            )
        else:
            notes.append(
                f"fidelity witness inconclusive: F = {measured.fidelity} does not exceed 1/2"
            )
    ghz = all(c is Certification.ONE for c in certified.values())
    if ghz:
        notes.append(f"all s_k certified 1: {n}-party GHZ distillability certified")
    return DetectionVerdict(n, delta, certified, margins, ghz, tuple(notes))


def fidelity_threshold_worst_case():
    """GHZ overlap that certifies entanglement with no shape assumptions.

    Covers the worst case in which all remaining weight piles onto
    lambda0- and a single sector; independent of the number of parties.
    """
    return 0.5


def fidelity_threshold_best_case(n_parties):
    """Overlap threshold 1/(2**N - 1) for the most favourable state shape."""
    if n_parties < 2:
        raise ValueError("need at least two parties")
    return 1.0 / (2**n_parties - 1)


def fidelity_extremal_state(n_parties, f):
    """The family member whose GHZ distillability flips at the best-case bound.

    Shape: lambda0+ proportional to f, lambda0- = 0, and the sector sums
    2*lambda_k all equal to (1-f)/(2**N - 2).  That raw parameter choice
    carries total weight (1+f)/2, so it is rescaled to unit trace; the
    rescaling leaves every comparison lambda_k vs delta/2 unchanged, and
    all s_k = 1 holds exactly for f > 1/(2**N - 1).
    """
    if n_parties < 2:
        raise ValueError("need at least two parties")
    if not 0.0 <= f <= 1.0:
        raise ValueError("f must lie in [0, 1]")
    scale = 2.0 / (1.0 + f)
    sector_lambda = 0.5 * (1.0 - f) / (2**n_parties - 2) * scale
    return GhzDiagonalState(
        n_parties, f * scale, 0.0, (sector_lambda,) * n_sectors(n_parties)
    )


def ghz_fidelity(rho):
    """Overlap of a density matrix with the N-party GHZ state."""
    psi = ghz_basis_state(0, "+", rho.n_qubits).amplitudes
    return float(np.real(np.vdot(psi, rho.matrix @ psi)))


@dataclass(frozen=True)
class WhiteNoiseAnalysis:
    """Result of admixing white noise: rho(x) = x*base + (1-x)*identity/2**N."""

    n_parties: int
    f0: float
    threshold: float
    fidelity_at_threshold: float
    note: str = ""

    def fidelity(self, x):
        """The affine fidelity map F(x) = x*F0 + (1-x)/2**N."""
        return x * self.f0 + (1.0 - x) * 2.0**-self.n_parties


def white_noise_analysis(base, n_parties=None):
    """Smallest admixture weight x at which every s_k is (certifiably) one.

    ``base`` is either an exact family member or interval-valued
    measurement data; in the latter case the threshold uses the certified
    worst-case endpoints.  Returns threshold None with an explanatory note
    when no weight can certify all sectors.
    """
    if isinstance(base, GhzDiagonalState):
        n = base.n_parties
        delta_lo = base.delta
        two_lambda_hi = {k: 2.0 * base.lam[k - 1] for k in range(1, n_sectors(n) + 1)}
        f0 = base.lambda0_plus
    elif isinstance(base, MeasuredCoefficients):
        n = base.n_parties
        delta_lo = detect(base).delta.lo
        two_lambda_hi = {
            k: base.two_lambda_bounds(k).hi for k in range(1, n_sectors(n) + 1)
        }
        f0 = base.fidelity.mid if base.fidelity is not None else base.lambda0_plus.mid
    else:
        raise TypeError("base must be a GhzDiagonalState or MeasuredCoefficients")
    if n_parties is not None and n_parties != n:
        raise ValueError("n_parties disagrees with the base data")
    if delta_lo <= 0.0:
        return WhiteNoiseAnalysis(n, f0, None, None, "never certified: delta is not positive")
    # Noise adds (1-x)/2**N to every basis state, hence (1-x)*2**(1-N) to
    # each sector sum, while delta scales as x*delta.
    q = 2.0 ** (1 - n)
    threshold = 0.0
    for k in range(1, n_sectors(n) + 1):
        margin = delta_lo - two_lambda_hi[k]
        if margin <= 0.0:
            return WhiteNoiseAnalysis(
                n, f0, None, None,
                f"never certified: sector {chain_string(k, n)} has no positive margin",
            )
        threshold = max(threshold, q / (margin + q))
    fidelity_at = threshold * f0 + (1.0 - threshold) * 2.0**-n
    return WhiteNoiseAnalysis(n, f0, threshold, fidelity_at)
