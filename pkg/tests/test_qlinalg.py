"""Tests for the dense multi-qubit linear algebra layer."""

import math

import numpy as np
import pytest

from ghzkit.qlinalg import (
    CapacityError,
    DensityMatrix,
    StateVector,
    hermitian_eigenvalues,
    is_npt,
    min_pt_eigenvalue,
    partial_trace,
    partial_transpose,
    tensor_product,
)
from oracles import eigenvalues_via_charpoly, naive_partial_trace, random_density

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)


def bell_psi_plus():
    amp = np.zeros(4, dtype=complex)
    amp[1] = amp[2] = 1 / math.sqrt(2)
    return StateVector(2, amp).density_matrix()


def ghz_density(n):
    amp = np.zeros(2**n, dtype=complex)
    amp[0] = amp[-1] = 1 / math.sqrt(2)
    return StateVector(n, amp).density_matrix()


class TestTypes:
    def test_state_vector_norm_enforced(self):
        with pytest.raises(ValueError):
            StateVector(1, [1.0, 1.0])

    def test_density_matrix_validates_hermiticity(self):
        m = np.array([[0.5, 0.5], [0.0, 0.5]], dtype=complex)
        with pytest.raises(ValueError):
            DensityMatrix(1, m)

    def test_density_matrix_validates_trace(self):
        with pytest.raises(ValueError):
            DensityMatrix(1, 2 * np.eye(2))

    def test_density_matrix_validates_positivity(self):
        m = np.diag([1.5, -0.5]).astype(complex)
        with pytest.raises(ValueError):
            DensityMatrix(1, m)

    def test_capacity_limit(self):
        with pytest.raises(CapacityError):
            StateVector(3, np.ones(8) / math.sqrt(8), max_qubits=2)


class TestTensorProduct:
    def test_identity_case(self):
        assert np.array_equal(tensor_product(I2, I2), np.eye(4))

    def test_basis_projectors(self):
        p0 = np.diag([1.0, 0.0]).astype(complex)
        p1 = np.diag([0.0, 1.0]).astype(complex)
        assert np.array_equal(tensor_product(p0, p1), np.diag([0.0, 1.0, 0.0, 0.0]))

    def test_mixed_product_property(self):
        left = tensor_product(X, I2) @ tensor_product(I2, X)
        assert np.allclose(left, tensor_product(X, X))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            tensor_product(np.eye(2**7), np.eye(2**6), max_qubits=12)


class TestPartialTrace:
    def test_keep_everything(self):
        rho = ghz_density(3)
        reduced = partial_trace(rho, (1, 2, 3))
        assert np.allclose(reduced.matrix, rho.matrix)

    def test_product_state_factorizes(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            sigma = random_density(rng, 2)
            tau = random_density(rng, 4)
            joint = DensityMatrix(3, tensor_product(sigma, tau))
            assert np.allclose(partial_trace(joint, (1,)).matrix, sigma, atol=1e-12)
            assert np.allclose(partial_trace(joint, (2, 3)).matrix, tau, atol=1e-12)

    def test_ghz3_pair_marginal(self):
        reduced = partial_trace(ghz_density(3), (1, 2))
        expected = np.diag([0.5, 0.0, 0.0, 0.5]).astype(complex)
        assert np.allclose(reduced.matrix, expected, atol=1e-12)

    def test_matches_index_loop_oracle(self):
        rng = np.random.default_rng(11)
        rho = DensityMatrix(3, random_density(rng, 8))
        for keep in [(1,), (2,), (3,), (1, 3), (2, 1), (3, 1, 2)]:
            expected = naive_partial_trace(rho.matrix, 3, keep)
            assert np.allclose(partial_trace(rho, keep).matrix, expected, atol=1e-12)

    def test_argument_errors(self):
        rho = ghz_density(2)
        with pytest.raises(ValueError):
            partial_trace(rho, ())
        with pytest.raises(ValueError):
            partial_trace(rho, (1, 1))
        with pytest.raises(ValueError):
            partial_trace(rho, (0,))

    def test_linear_in_rho(self):
        rng = np.random.default_rng(13)
        a = random_density(rng, 8)
        b = random_density(rng, 8)
        mixed = DensityMatrix(3, 0.25 * a + 0.75 * b)
        lhs = partial_trace(mixed, (2,)).matrix
        rhs = (0.25 * partial_trace(DensityMatrix(3, a), (2,)).matrix
               + 0.75 * partial_trace(DensityMatrix(3, b), (2,)).matrix)
        assert np.allclose(lhs, rhs, atol=1e-12)


class TestPartialTranspose:
    def test_diagonal_invariant(self):
        rho = DensityMatrix(2, np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex))
        for subset in [set(), {1}, {2}, {1, 2}]:
            assert np.array_equal(partial_transpose(rho, subset), rho.matrix)

    def test_bell_state_spectrum(self):
        pt = partial_transpose(bell_psi_plus(), {1})
        eigs = hermitian_eigenvalues(pt)
        assert np.allclose(eigs, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_full_subset_is_transpose(self):
        rng = np.random.default_rng(17)
        rho = DensityMatrix(2, random_density(rng, 4))
        full = partial_transpose(rho, {1, 2})
        assert np.allclose(full, rho.matrix.T)
        assert np.allclose(
            hermitian_eigenvalues(full), hermitian_eigenvalues(rho.matrix), atol=1e-12
        )

    def test_involution_and_disjoint_commute(self):
        rng = np.random.default_rng(19)
        rho = DensityMatrix(3, random_density(rng, 8))
        once = partial_transpose(rho, {2})
        # involution: applying the same transpose twice restores the input
        assert np.allclose(partial_transpose(once, {2}), rho.matrix, atol=1e-12)
        # composing disjoint subsets equals the union
        union = partial_transpose(rho, {1, 3})
        via_steps = partial_transpose(partial_transpose(rho, {1}), {3})
        assert np.allclose(union, via_steps, atol=1e-12)
        # trace and hermiticity preserved
        assert abs(np.trace(once) - 1.0) < 1e-12
        assert np.abs(once - once.conj().T).max() < 1e-12

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            partial_transpose(ghz_density(2), {3})


class TestEigenvalues:
    def test_diagonal(self):
        assert np.allclose(hermitian_eigenvalues(np.diag([0.9, 0.1])), [0.1, 0.9])

    def test_pauli_x(self):
        assert np.allclose(hermitian_eigenvalues(X), [-1.0, 1.0])

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValueError):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_matches_charpoly_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            h = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            h = (h + h.conj().T) / 2
            expected = eigenvalues_via_charpoly(h)
            got = hermitian_eigenvalues(h)
            assert np.allclose(got, expected, atol=1e-8)

    def test_sum_equals_trace(self):
        rng = np.random.default_rng(29)
        h = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
        h = (h + h.conj().T) / 2
        assert abs(hermitian_eigenvalues(h).sum() - np.trace(h).real) < 1e-9 * 8


class TestNpt:
    def test_product_state_is_ppt(self):
        rng = np.random.default_rng(31)
        sigma = random_density(rng, 2)
        tau = random_density(rng, 2)
        rho = DensityMatrix(2, tensor_product(sigma, tau))
        assert not is_npt(rho, {1})

    def test_bell_state_is_npt(self):
        assert is_npt(bell_psi_plus(), {1})
        assert abs(min_pt_eigenvalue(bell_psi_plus(), {1}) + 0.5) < 1e-12

    def test_noisy_ghz4_above_threshold(self):
        from ghzkit.family import ghz_with_white_noise, to_density_matrix

        rho = to_density_matrix(ghz_with_white_noise(4, 0.2))
        for q in (1, 2, 3, 4):
            assert is_npt(rho, {q})

    def test_two_qubit_side_symmetry(self):
        rng = np.random.default_rng(37)
        for _ in range(25):
            rho = DensityMatrix(2, random_density(rng, 4))
            assert is_npt(rho, {1}) == is_npt(rho, {2})
