"""The GHZ-diagonal state family and its coefficient calculus.

A family member of N qubits is fixed by 2**(N-1) real numbers: the weights
lambda0+ and lambda0- of the extreme GHZ pair, and one weight lambda_k per
degenerate sector k (an (N-1)-bit chain).  The basis states are

    |Psi_k^+-> = (|k 0> +- |kbar 1>) / sqrt(2),

where kbar is the bitwise complement of k.  The density matrix of a family
member is "X-shaped": diagonal except for one coherence between |0...0>
and |1...1>.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .qlinalg import DEFAULT_MAX_QUBITS, DensityMatrix, StateVector

TOL_NORMALIZATION = 1e-10
TOL_COEFFICIENT = 1e-12


def n_sectors(n_parties):
    """Number of nontrivial sectors (and of proper splittings)."""
    return 2 ** (n_parties - 1) - 1


def sector_basis_indices(n_parties, k):
    """Computational-basis indices of |k 0> and |kbar 1> for sector ``k``."""
    if not 0 <= k <= n_sectors(n_parties):
        raise ValueError(f"sector {k} out of range for N={n_parties}")
    return 2 * k, 2**n_parties - 2 * k - 1


def _nonneg(value, label):
    if value < -TOL_COEFFICIENT:
        raise ValueError(f"{label} = {value} is negative")
    return max(value, 0.0)


@dataclass(frozen=True)
class GhzDiagonalState:
    """Coefficient vector of a family member.

    ``lam[k-1]`` holds lambda_k for sector k in 1 .. 2**(N-1)-1.  The
    labels are fixed so that delta = lambda0_plus - lambda0_minus >= 0;
    ``relabeled`` records when extraction had to swap the +- labels to
    enforce this.
    """

    n_parties: int
    lambda0_plus: float
    lambda0_minus: float
    lam: tuple
    relabeled: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.n_parties < 2:
            raise ValueError("the family needs at least two parties")
        lam = tuple(_nonneg(float(x), "lambda_k") for x in self.lam)
        if len(lam) != n_sectors(self.n_parties):
            raise ValueError(
                f"expected {n_sectors(self.n_parties)} sector coefficients, got {len(lam)}"
            )
        lp = _nonneg(float(self.lambda0_plus), "lambda0_plus")
        lm = _nonneg(float(self.lambda0_minus), "lambda0_minus")
        total = math.fsum((lp, lm) + lam + lam)
        if abs(total - 1.0) > TOL_NORMALIZATION:
            raise ValueError(f"coefficients are not normalized (sum = {total})")
        if lp - lm < -TOL_COEFFICIENT:
            raise ValueError("labels must satisfy lambda0_plus >= lambda0_minus")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "lambda0_plus", lp)
        object.__setattr__(self, "lambda0_minus", lm)

    @classmethod
    def from_lambdas(cls, n_parties, lambda0_plus, lambda0_minus=0.0, lambdas=None,
                     relabeled=False):
        """Build a state from a sparse {sector: value} mapping.

        Sector keys may be integers or bit-chain strings; missing sectors
        default to zero.
        """
        lam = [0.0] * n_sectors(n_parties)
        for key, value in (lambdas or {}).items():
            if isinstance(key, str):
                if len(key) != n_parties - 1 or any(c not in "01" for c in key):
                    raise ValueError(f"chain {key!r} must have {n_parties - 1} bits")
                key = int(key, 2)
            if not 1 <= key <= n_sectors(n_parties):
                raise ValueError(f"sector {key} out of range for N={n_parties}")
            lam[key - 1] = float(value)
        return cls(n_parties, lambda0_plus, lambda0_minus, tuple(lam), relabeled=relabeled)

    @property
    def delta(self):
        return self.lambda0_plus - self.lambda0_minus

    def lambda_value(self, k):
        if not 1 <= k <= n_sectors(self.n_parties):
            raise ValueError(f"sector {k} out of range")
        return self.lam[k - 1]

    @property
    def lambdas(self):
        return {k: self.lam[k - 1] for k in range(1, n_sectors(self.n_parties) + 1)}


@dataclass(frozen=True)
class SVector:
    """The binary signature s_k = 1 iff lambda_k < delta/2 (strict)."""

    n_parties: int
    bits: tuple

    def s(self, k):
        if not 1 <= k <= n_sectors(self.n_parties):
            raise ValueError(f"sector {k} out of range")
        return self.bits[k - 1]

    @property
    def all_one(self):
        return all(self.bits)

    @property
    def all_zero(self):
        return not any(self.bits)

    def support(self):
        """Sectors with s_k = 1."""
        return frozenset(k for k, b in enumerate(self.bits, start=1) if b)


def pure_ghz(n_parties):
    """The projector coefficients of the N-party GHZ state."""
    return GhzDiagonalState.from_lambdas(n_parties, 1.0)


def maximally_mixed(n_parties):
    w = 2.0**-n_parties
    return GhzDiagonalState(n_parties, w, w, (w,) * n_sectors(n_parties))


def mix_with_white_noise(state, x):
    """x * state + (1 - x) * identity/2**N, coefficient-wise."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("mixing weight must lie in [0, 1]")
    w = (1.0 - x) * 2.0**-state.n_parties
    return GhzDiagonalState(
        state.n_parties,
        x * state.lambda0_plus + w,
        x * state.lambda0_minus + w,
        tuple(x * lam + w for lam in state.lam),
    )


def ghz_with_white_noise(n_parties, x):
    """The noisy-GHZ line rho(x) = x |GHZ><GHZ| + (1 - x) identity/2**N."""
    return mix_with_white_noise(pure_ghz(n_parties), x)


def ghz_basis_state(k, sign, n_parties, max_qubits=DEFAULT_MAX_QUBITS):
    """The basis vector (|k 0> +- |kbar 1>)/sqrt(2).

    ``k`` is an integer sector label or an (N-1)-bit chain string; ``sign``
    is "+"/"-" or +1/-1.  The 2**N such vectors form an orthonormal basis.
    """
    if isinstance(k, str):
        if len(k) != n_parties - 1 or any(c not in "01" for c in k):
            raise ValueError(f"chain {k!r} must have {n_parties - 1} bits")
        k = int(k, 2)
    sgn = {"+": 1.0, "-": -1.0, 1: 1.0, -1: -1.0}.get(sign)
    if sgn is None:
        raise ValueError("sign must be '+', '-', +1 or -1")
    i0, i1 = sector_basis_indices(n_parties, k)
    amp = np.zeros(2**n_parties, dtype=complex)
    amp[i0] = 1.0 / math.sqrt(2.0)
    amp[i1] = sgn / math.sqrt(2.0)
    return StateVector(n_parties, amp, max_qubits=max_qubits)


def to_density_matrix(state, max_qubits=DEFAULT_MAX_QUBITS):
    """Expand a coefficient vector into its X-shaped density matrix."""
    n = state.n_parties
    dim = 2**n
    m = np.zeros((dim, dim), dtype=complex)
    m[0, 0] = m[dim - 1, dim - 1] = 0.5 * (state.lambda0_plus + state.lambda0_minus)
    m[0, dim - 1] = m[dim - 1, 0] = 0.5 * state.delta
    for k in range(1, n_sectors(n) + 1):
        i0, i1 = sector_basis_indices(n, k)
        m[i0, i0] = m[i1, i1] = state.lam[k - 1]
    return DensityMatrix(n, m, max_qubits=max_qubits)


def extract_coefficients(rho):
    """Family coefficients of an arbitrary density matrix.

    Reads off lambda0+- from the extreme 2x2 corner block and the sector
    sums 2*lambda_j from the remaining diagonal; any density matrix yields
    a normalized coefficient vector.  If the extracted lambda0+ falls below
    lambda0-, the labels are swapped and the swap recorded.
    """
    n = rho.n_qubits
    if n < 2:
        raise ValueError("the family needs at least two qubits")
    dim = 2**n
    m = rho.matrix
    half_corner = 0.5 * (m[0, 0].real + m[dim - 1, dim - 1].real)
    coherence = m[0, dim - 1].real
    lp, lm = half_corner + coherence, half_corner - coherence
    relabeled = lp < lm
    if relabeled:
        lp, lm = lm, lp
    lam = []
    for k in range(1, n_sectors(n) + 1):
        i0, i1 = sector_basis_indices(n, k)
        lam.append(0.5 * (m[i0, i0].real + m[i1, i1].real))
    return GhzDiagonalState(n, lp, lm, tuple(lam), relabeled=relabeled)


def depolarize(rho):
    """Project ``rho`` onto the family.

    This is the effective action of the local depolarization protocol: the
    coefficients lambda0+- and the sector sums 2*lambda_j survive, every
    other matrix element is erased.  Idempotent, trace preserving, and the
    projected state is never more entangled than the input, so verdicts
    derived from it are lower bounds for ``rho``.
    """
    return extract_coefficients(rho)


def delta(state):
    """The coherence gap lambda0+ - lambda0-  (equals 2 Re <0..0|rho|1..1>)."""
    return state.delta


def s_vector(state):
    """Signature bits: s_k = 1 iff lambda_k < delta/2, 0 at or above."""
    half = 0.5 * state.delta
    return SVector(state.n_parties, tuple(1 if lam < half else 0 for lam in state.lam))
