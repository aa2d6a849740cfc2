"""Dense kernel tests: these are the oracles, so they get hand-checked values."""

import numpy as np
import pytest

from tripow.families import FAMILY_A, FamilySpec, build_matrix
from tripow.linalg import (
    SingularMatrixError,
    mat_approx_eq,
    mat_det,
    mat_identity,
    mat_inverse,
    mat_mul,
    mat_norm_maxabs,
    mat_pow_binary,
)


def random_matrix(rng, n, scale=2.0):
    return (
        rng.uniform(-scale, scale, (n, n)) + 1j * rng.uniform(-scale, scale, (n, n))
    )


class TestMatMul:
    def test_identity_times_matrix(self):
        rng = np.random.default_rng(0)
        m = random_matrix(rng, 3)
        np.testing.assert_array_equal(mat_mul(mat_identity(3), m), m)

    def test_hand_product(self):
        m = np.array([[1, 2], [1, 1]], dtype=complex)
        np.testing.assert_array_equal(mat_mul(m, m), [[3, 4], [2, 3]])

    def test_family_a_square(self):
        a = build_matrix(FamilySpec(FAMILY_A, 3, 1, 1))
        np.testing.assert_allclose(mat_mul(a, a), [[3, 4, 4], [2, 5, 4], [1, 2, 3]])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="incompatible"):
            mat_mul(mat_identity(2), mat_identity(3))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            mat_mul(np.ones((2, 3)), np.ones((3, 3)))

    def test_rejects_non_finite(self):
        bad = np.array([[np.nan, 0], [0, 1]])
        with pytest.raises(ValueError, match="finite"):
            mat_mul(bad, np.eye(2))

    def test_associativity_on_random_triples(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            n = int(rng.integers(1, 8))
            x, y, z = (random_matrix(rng, n) for _ in range(3))
            left = mat_mul(mat_mul(x, y), z)
            right = mat_mul(x, mat_mul(y, z))
            scale = max(1.0, mat_norm_maxabs(left))
            assert mat_norm_maxabs(left - right) <= 1e-9 * scale


class TestMatPowBinary:
    def test_zeroth_power_is_identity(self):
        rng = np.random.default_rng(1)
        m = random_matrix(rng, 4)
        np.testing.assert_array_equal(mat_pow_binary(m, 0), mat_identity(4))

    def test_first_power_is_matrix(self):
        rng = np.random.default_rng(2)
        m = random_matrix(rng, 4)
        np.testing.assert_allclose(mat_pow_binary(m, 1), m)

    def test_cube_of_family_a(self):
        a = build_matrix(FamilySpec(FAMILY_A, 3, 1, 1))
        np.testing.assert_allclose(
            mat_pow_binary(a, 3), [[7, 14, 12], [7, 13, 14], [3, 7, 7]]
        )

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            mat_pow_binary(mat_identity(2), -1)

    def test_matches_chained_multiplication(self):
        rng = np.random.default_rng(3)
        for _ in range(12):
            n = int(rng.integers(1, 9))
            s = int(rng.integers(0, 7))
            m = random_matrix(rng, n)
            chained = mat_identity(n)
            for _ in range(s):
                chained = mat_mul(chained, m)
            scale = max(1.0, mat_norm_maxabs(chained))
            assert mat_norm_maxabs(mat_pow_binary(m, s) - chained) <= 1e-9 * scale


class TestMatInverse:
    def test_identity(self):
        np.testing.assert_array_equal(mat_inverse(mat_identity(3)), mat_identity(3))

    def test_diagonal(self):
        np.testing.assert_allclose(
            mat_inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25])
        )

    def test_family_a_inverse_residual(self):
        # invertible: eigenvalue product 5*3*(-1)*(-3) = 45
        a = build_matrix(FamilySpec(FAMILY_A, 4, 1, 2))
        residual = mat_norm_maxabs(mat_mul(a, mat_inverse(a)) - mat_identity(4))
        assert residual < 1e-12

    def test_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            mat_inverse(np.array([[1.0, 2.0], [2.0, 4.0]]))

    def test_zero_matrix_raises(self):
        with pytest.raises(SingularMatrixError):
            mat_inverse(np.zeros((3, 3)))

    def test_random_diagonally_dominant(self):
        rng = np.random.default_rng(4)
        for _ in range(10):
            n = int(rng.integers(1, 9))
            m = random_matrix(rng, n)
            m += np.diag(np.full(n, 4.0 * n))
            residual = mat_norm_maxabs(mat_mul(m, mat_inverse(m)) - mat_identity(n))
            assert residual <= 1e-9


class TestMatDet:
    def test_hand_values(self):
        assert mat_det(np.array([[1, 2], [3, 4]], dtype=complex)) == pytest.approx(-2)
        assert mat_det(mat_identity(5)) == pytest.approx(1)
        assert mat_det(np.zeros((2, 2))) == 0

    def test_permutation_sign(self):
        assert mat_det(np.array([[0.0, 1.0], [1.0, 0.0]])) == pytest.approx(-1)

    def test_against_numpy_on_random(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            n = int(rng.integers(1, 8))
            m = random_matrix(rng, n)
            expected = np.linalg.det(m)
            assert abs(mat_det(m) - expected) <= 1e-9 * (1 + abs(expected))


class TestNormAndCompare:
    def test_norm_zero(self):
        assert mat_norm_maxabs(np.zeros((3, 3))) == 0.0

    def test_norm_identity(self):
        assert mat_norm_maxabs(mat_identity(4)) == 1.0

    def test_norm_modulus(self):
        assert mat_norm_maxabs(np.array([[3 + 4j]])) == pytest.approx(5.0)

    def test_approx_eq_exact(self):
        m = np.array([[1.0, 2.0], [3.0, 4.0]])
        assert mat_approx_eq(m, m, 0.0)

    def test_approx_eq_within_tol(self):
        assert mat_approx_eq(mat_identity(3), 1.0000001 * mat_identity(3), 1e-6)

    def test_approx_eq_outside_tol(self):
        assert not mat_approx_eq(mat_identity(3), 2.0 * mat_identity(3), 1e-6)

    def test_approx_eq_shape_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            mat_approx_eq(mat_identity(2), mat_identity(3), 1.0)
