"""Dense complex linear algebra for systems of up to a dozen qubits.

Conventions used throughout the package:

* qubits (and parties) are numbered 1..N;
* qubit 1 is the most significant bit of a computational-basis index,
  so |b_1 b_2 ... b_N> lives at index sum_i b_i * 2**(N - i).
"""

import numpy as np

TOL_HERMITIAN = 1e-12
TOL_TRACE = 1e-10
TOL_PSD = 1e-10
DEFAULT_MAX_QUBITS = 12


class CapacityError(Exception):
    """An operation would exceed the configured qubit limit."""


def _require_capacity(n_qubits, max_qubits):
    if n_qubits > max_qubits:
        raise CapacityError(
            f"{n_qubits} qubits exceed the configured maximum of {max_qubits}"
        )


def _as_square_complex(m):
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    return m


class StateVector:
    """Pure state of ``n_qubits`` qubits; amplitudes must be unit-norm."""

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits, amplitudes, max_qubits=DEFAULT_MAX_QUBITS):
        if n_qubits < 1:
            raise ValueError("n_qubits must be at least 1")
        _require_capacity(n_qubits, max_qubits)
        amp = np.array(amplitudes, dtype=complex).reshape(-1)
        if amp.size != 2**n_qubits:
            raise ValueError(f"expected {2**n_qubits} amplitudes, got {amp.size}")
        if abs(np.linalg.norm(amp) - 1.0) > 1e-12:
            raise ValueError("state vector is not normalized")
        amp.flags.writeable = False
        self.n_qubits = n_qubits
        self.amplitudes = amp

    def density_matrix(self, max_qubits=DEFAULT_MAX_QUBITS):
        return DensityMatrix(
            self.n_qubits,
            np.outer(self.amplitudes, self.amplitudes.conj()),
            max_qubits=max_qubits,
        )

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits})"


class DensityMatrix:
    """Hermitian, positive-semidefinite, trace-one operator on ``n_qubits`` qubits."""

    __slots__ = ("n_qubits", "matrix")

    def __init__(self, n_qubits, matrix, max_qubits=DEFAULT_MAX_QUBITS):
        if n_qubits < 1:
            raise ValueError("n_qubits must be at least 1")
        _require_capacity(n_qubits, max_qubits)
        m = np.array(matrix, dtype=complex)
        dim = 2**n_qubits
        if m.shape != (dim, dim):
            raise ValueError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
        if np.abs(m - m.conj().T).max() > TOL_HERMITIAN:
            raise ValueError("matrix is not Hermitian within tolerance")
        tr = m.trace()
        if abs(tr.real - 1.0) > TOL_TRACE or abs(tr.imag) > TOL_TRACE:
            raise ValueError(f"matrix trace is {tr}, expected 1")
        if np.linalg.eigvalsh(m)[0] < -TOL_PSD:
            raise ValueError("matrix is not positive semidefinite within tolerance")
        m.flags.writeable = False
        self.n_qubits = n_qubits
        self.matrix = m

    def __repr__(self):
        return f"DensityMatrix(n_qubits={self.n_qubits})"


def tensor_product(a, b, max_qubits=DEFAULT_MAX_QUBITS):
    """Kronecker product of two square complex matrices."""
    a = _as_square_complex(a)
    b = _as_square_complex(b)
    if a.shape[0] * b.shape[0] > 2**max_qubits:
        raise CapacityError(
            f"product dimension {a.shape[0] * b.shape[0]} exceeds 2**{max_qubits}"
        )
    return np.kron(a, b)


def partial_trace(rho, keep, max_qubits=DEFAULT_MAX_QUBITS):
    """Reduced operator on the qubits listed in ``keep``.

    ``keep`` is an ordered collection of distinct 1-based qubit indices; the
    result carries those qubits in the given order.
    """
    keep = [int(q) for q in keep]
    n = rho.n_qubits
    if not keep:
        raise ValueError("keep must name at least one qubit")
    if len(set(keep)) != len(keep):
        raise ValueError("keep contains duplicate qubit indices")
    if any(q < 1 or q > n for q in keep):
        raise ValueError("keep indices must lie in 1..n_qubits")
    kept = set(keep)
    t = rho.matrix.reshape((2,) * (2 * n))
    # Row axis of qubit q is q-1, column axis is n+q-1; tying a traced
    # qubit's column label to its row label contracts it.
    labels = list(range(n)) + [n + i if (i + 1) in kept else i for i in range(n)]
    out = [q - 1 for q in keep] + [n + q - 1 for q in keep]
    reduced = np.einsum(t, labels, out)
    d = 2 ** len(keep)
    return DensityMatrix(len(keep), reduced.reshape(d, d), max_qubits=max_qubits)


def _operator_and_qubits(rho):
    if isinstance(rho, DensityMatrix):
        return rho.matrix, rho.n_qubits
    m = _as_square_complex(rho)
    n = m.shape[0].bit_length() - 1
    if 2**n != m.shape[0]:
        raise ValueError("matrix dimension is not a power of two")
    return m, n


def partial_transpose(rho, subset):
    """Transpose the indices of the qubits in ``subset`` only.

    ``rho`` may be a DensityMatrix or a plain square matrix of qubit
    dimension (so the operation can be applied to its own output).
    ``subset`` may be empty (identity) or contain all qubits (full
    transpose).  The result is Hermitian and trace-one for density-matrix
    input but in general not positive.
    """
    matrix, n = _operator_and_qubits(rho)
    subset = {int(q) for q in subset}
    if any(q < 1 or q > n for q in subset):
        raise ValueError("subset indices must lie in 1..n_qubits")
    if not subset:
        return np.array(matrix)
    t = matrix.reshape((2,) * (2 * n))
    axes = list(range(2 * n))
    for q in subset:
        axes[q - 1], axes[n + q - 1] = axes[n + q - 1], axes[q - 1]
    d = 2**n
    return np.ascontiguousarray(t.transpose(axes).reshape(d, d))


def hermitian_eigenvalues(m):
    """All eigenvalues of a Hermitian matrix, in ascending order."""
    m = _as_square_complex(m)
    if m.size and np.abs(m - m.conj().T).max() > TOL_HERMITIAN:
        raise ValueError("matrix is not Hermitian within tolerance")
    return np.linalg.eigvalsh(m)


def min_pt_eigenvalue(rho, subset):
    """Smallest eigenvalue of the partial transpose of ``rho``."""
    return float(hermitian_eigenvalues(partial_transpose(rho, subset))[0])


def is_npt(rho, subset, tol=TOL_PSD):
    """True when the partial transpose has an eigenvalue below ``-tol``.

    For two qubits this is exactly the distillability (and inseparability)
    criterion; for more parties a negative partial transpose across a
    splitting witnesses inseparability across it.
    """
    return min_pt_eigenvalue(rho, subset) < -tol
