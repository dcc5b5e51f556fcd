"""Entanglement molecules: pairwise-programmable multiqubit states.

A molecule over N qubits mixes the states |Psi+>_{kl} (x) |0...0>_rest, one
term per pair in a chosen set I.  Tracing out everything but a pair then
gives a two-qubit operator whose separability can be settled exactly with
the partial-transpose criterion, so the realized pair structure can be
verified rather than assumed.
"""

import math
from dataclasses import dataclass

import numpy as np

from .qlinalg import (
    DEFAULT_MAX_QUBITS,
    TOL_PSD,
    DensityMatrix,
    StateVector,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
)


def _normalize_pair(pair):
    k, l = (int(p) for p in pair)
    if k == l:
        raise ValueError("a pair needs two distinct parties")
    return (k, l) if k < l else (l, k)


@dataclass(frozen=True)
class MoleculeSpec:
    """Target pair structure: the set I of pairs meant to be distillable."""

    n_parties: int
    pairs: frozenset
    weights: dict = None

    def __post_init__(self):
        if self.n_parties < 3:
            raise ValueError("a molecule needs at least three parties")
        pairs = frozenset(_normalize_pair(p) for p in self.pairs)
        if not pairs:
            raise ValueError("the pair set must be nonempty")
        for k, l in pairs:
            if k < 1 or l > self.n_parties:
                raise ValueError(f"pair ({k},{l}) out of range")
        weights = {}
        for pair, w in (self.weights or {}).items():
            pair = _normalize_pair(pair)
            if pair not in pairs:
                raise ValueError(f"weight given for pair {pair} outside the pair set")
            if float(w) <= 0.0:
                raise ValueError("weights must be positive")
            weights[pair] = float(w)
        for pair in pairs:
            weights.setdefault(pair, 1.0)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def fully_connected(cls, n_parties):
        return cls(
            n_parties,
            frozenset(
                (i, j)
                for i in range(1, n_parties)
                for j in range(i + 1, n_parties + 1)
            ),
        )

    @property
    def total_weight(self):
        return math.fsum(self.weights.values())


def pair_state(i, j, n_parties, max_qubits=DEFAULT_MAX_QUBITS):
    """|Psi+>_{ij} (x) |0...0> on the remaining qubits."""
    i, j = _normalize_pair((i, j))
    if i < 1 or j > n_parties:
        raise ValueError(f"pair ({i},{j}) out of range")
    amp = np.zeros(2**n_parties, dtype=complex)
    amp[1 << (n_parties - i)] = 1.0 / math.sqrt(2.0)
    amp[1 << (n_parties - j)] = 1.0 / math.sqrt(2.0)
    return StateVector(n_parties, amp, max_qubits=max_qubits)


def molecule_state(spec, max_qubits=DEFAULT_MAX_QUBITS):
    """The normalized molecule mixture for a pair specification."""
    dim = 2**spec.n_parties
    if dim > 2**max_qubits:
        raise ValueError(f"{spec.n_parties} parties exceed max_qubits={max_qubits}")
    m = np.zeros((dim, dim), dtype=complex)
    total = spec.total_weight
    for pair in sorted(spec.pairs):
        amp = pair_state(*pair, spec.n_parties, max_qubits=max_qubits).amplitudes
        m += (spec.weights[pair] / total) * np.outer(amp, amp.conj())
    return DensityMatrix(spec.n_parties, m, max_qubits=max_qubits)


def reduced_pair(rho, k, l):
    """Two-qubit reduced operator of qubits (k, l), in that order."""
    if int(k) == int(l):
        raise ValueError("a pair needs two distinct parties")
    return partial_trace(rho, (k, l))


_BELL_VECTORS = None


def _bell_vectors():
    global _BELL_VECTORS
    if _BELL_VECTORS is None:
        r = 1.0 / math.sqrt(2.0)
        _BELL_VECTORS = {
            "phi+": np.array([r, 0, 0, r], dtype=complex),
            "phi-": np.array([r, 0, 0, -r], dtype=complex),
            "psi+": np.array([0, r, r, 0], dtype=complex),
            "psi-": np.array([0, r, -r, 0], dtype=complex),
        }
    return _BELL_VECTORS


@dataclass(frozen=True)
class PairVerdict:
    pair: tuple
    npt: bool
    min_pt_eigenvalue: float
    bell_fidelity: float
    witness_conclusive: bool


def pair_verdict(rho_pair, pair=(1, 2), tol=TOL_PSD):
    """Separability verdict for a two-qubit reduced operator.

    ``npt`` settles distillability exactly for two qubits; the Bell
    fidelity maximizes the overlap over the four canonical Bell states
    only, so F > 1/2 is sufficient but not necessary for npt.
    """
    if rho_pair.n_qubits != 2:
        raise ValueError("pair verdicts need a two-qubit operator")
    min_eig = float(hermitian_eigenvalues(partial_transpose(rho_pair, {1}))[0])
    fid = max(
        float(np.real(np.vdot(v, rho_pair.matrix @ v)))
        for v in _bell_vectors().values()
    )
    return PairVerdict(
        pair=tuple(pair),
        npt=min_eig < -tol,
        min_pt_eigenvalue=min_eig,
        bell_fidelity=fid,
        witness_conclusive=fid > 0.5,
    )


@dataclass(frozen=True)
class MoleculeReport:
    spec: MoleculeSpec
    verdicts: dict       # pair -> PairVerdict
    mismatches: tuple    # pairs whose npt verdict disagrees with membership in I

    @property
    def matches(self):
        return not self.mismatches


def verify_molecule(spec, max_qubits=DEFAULT_MAX_QUBITS, tol=TOL_PSD):
    """Check every reduced pair of the molecule against the requested set I.

    Whether a weight assignment realizes the requested structure is not
    assumed; disagreements are reported in ``mismatches``.
    """
    rho = molecule_state(spec, max_qubits=max_qubits)
    verdicts, mismatches = {}, []
    for i in range(1, spec.n_parties):
        for j in range(i + 1, spec.n_parties + 1):
            verdict = pair_verdict(reduced_pair(rho, i, j), pair=(i, j), tol=tol)
            verdicts[(i, j)] = verdict
            if verdict.npt != ((i, j) in spec.pairs):
                mismatches.append((i, j))
    return MoleculeReport(spec=spec, verdicts=verdicts, mismatches=tuple(mismatches))
