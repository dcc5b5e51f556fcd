"""Independent reference implementations used only to check the library.

These deliberately avoid the code paths they verify: eigenvalues come from
the characteristic polynomial (Faddeev-LeVerrier coefficients plus a
Durand-Kerner root finder) instead of a Hermitian eigensolver, and the
reduced-operator oracle loops over explicit index arithmetic instead of
einsum.
"""

import numpy as np


def charpoly_coefficients(matrix):
    """Coefficients [1, c1, ..., cn] of det(xI - A) via Faddeev-LeVerrier."""
    a = np.asarray(matrix, dtype=complex)
    n = a.shape[0]
    coeffs = [1.0 + 0.0j]
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ m + coeffs[-1] * np.eye(n, dtype=complex)
        coeffs.append(-np.trace(a @ m) / k)
    return coeffs


def polynomial_roots(coeffs, iterations=200):
    """All roots of a monic polynomial by Durand-Kerner iteration."""
    coeffs = [complex(c) for c in coeffs]
    degree = len(coeffs) - 1
    if degree == 0:
        return []

    def poly(z):
        value = 0j
        for c in coeffs:
            value = value * z + c
        return value

    # Standard widely-spread start points, not roots of unity.
    roots = [(0.4 + 0.9j) ** k for k in range(degree)]
    for _ in range(iterations):
        new = []
        for i, r in enumerate(roots):
            denom = 1.0 + 0.0j
            for j, other in enumerate(roots):
                if i != j:
                    denom *= r - other
            new.append(r - poly(r) / denom)
        shift = max(abs(a - b) for a, b in zip(new, roots))
        roots = new
        if shift < 1e-14:
            break
    return roots


def eigenvalues_via_charpoly(matrix):
    """Ascending real eigenvalues of a Hermitian matrix, dim <= 4."""
    a = np.asarray(matrix, dtype=complex)
    if a.shape[0] > 4:
        raise ValueError("the characteristic-polynomial oracle is for dim <= 4")
    roots = polynomial_roots(charpoly_coefficients(a))
    return sorted(r.real for r in roots)


def naive_partial_trace(matrix, n_qubits, keep):
    """Index-loop reduced operator; qubit 1 is the most significant bit."""
    keep = list(keep)
    traced = [q for q in range(1, n_qubits + 1) if q not in keep]
    dim_keep = 2 ** len(keep)
    out = np.zeros((dim_keep, dim_keep), dtype=complex)

    def build_index(keep_bits, traced_bits):
        index = 0
        for q, bit in list(zip(keep, keep_bits)) + list(zip(traced, traced_bits)):
            index |= bit << (n_qubits - q)
        return index

    for row in range(dim_keep):
        row_bits = [(row >> (len(keep) - 1 - i)) & 1 for i in range(len(keep))]
        for col in range(dim_keep):
            col_bits = [(col >> (len(keep) - 1 - i)) & 1 for i in range(len(keep))]
            total = 0j
            for t in range(2 ** len(traced)):
                t_bits = [(t >> (len(traced) - 1 - i)) & 1 for i in range(len(traced))]
                total += matrix[build_index(row_bits, t_bits), build_index(col_bits, t_bits)]
            out[row, col] = total
    return out


def random_density(rng, dim):
    """Full-rank random density matrix of the given dimension."""
    k = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = k @ k.conj().T
    return rho / np.trace(rho).real


def random_family_state(rng, n_parties):
    """Random normalized family member with delta >= 0 (Dirichlet weights)."""
    from ghzkit.family import GhzDiagonalState, n_sectors

    weights = rng.dirichlet(np.ones(n_sectors(n_parties) + 2))
    lp, lm = weights[0], weights[1]
    if lp < lm:
        lp, lm = lm, lp
    return GhzDiagonalState(n_parties, lp, lm, tuple(0.5 * w for w in weights[2:]))
