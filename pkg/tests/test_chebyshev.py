"""Chebyshev recurrences checked against their trigonometric definitions."""

import math

import numpy as np
import pytest

from tripow.chebyshev import (
    NODE_KIND_EXTREMA,
    NODE_KIND_ROOTS,
    cheb_extrema,
    cheb_t,
    cheb_t_table,
    cheb_u,
    cheb_u_roots,
    cheb_u_table,
    p_value,
)


class TestFirstKind:
    def test_order_zero_is_one(self):
        for x in (-3.0, -1.0, 0.0, 0.7, 5.0):
            assert cheb_t(0, x) == 1.0

    def test_value_at_one(self):
        assert cheb_t(3, 1.0) == pytest.approx(1.0)

    def test_hand_value(self):
        # 2 * 0.25 - 1
        assert cheb_t(2, 0.5) == pytest.approx(-0.5)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            cheb_t(-1, 0.0)

    def test_cosine_identity(self):
        # T_k(cos t) = cos(k t)
        thetas = np.linspace(0.0, math.pi, 200)
        for k in range(13):
            values = cheb_t(k, np.cos(thetas))
            assert np.abs(values - np.cos(k * thetas)).max() < 1e-10


class TestSecondKind:
    def test_order_zero_is_one(self):
        for x in (-2.0, 0.0, 0.3):
            assert cheb_u(0, x) == 1.0

    def test_root_value(self):
        assert cheb_u(2, 0.5) == pytest.approx(0.0, abs=1e-15)

    def test_value_at_one(self):
        # U_k(1) = k + 1
        assert cheb_u(3, 1.0) == pytest.approx(4.0)

    def test_sine_identity(self):
        # U_k(cos t) = sin((k+1) t) / sin t
        thetas = np.linspace(0.0, math.pi, 202)[1:-1]
        for k in range(13):
            values = cheb_u(k, np.cos(thetas))
            expected = np.sin((k + 1) * thetas) / np.sin(thetas)
            assert np.abs(values - expected).max() < 1e-9


class TestTables:
    def test_t_table_matches_scalar(self):
        x = np.linspace(-1.5, 1.5, 7)
        table = cheb_t_table(6, x)
        for k in range(7):
            np.testing.assert_allclose(table[k], cheb_t(k, x))

    def test_u_table_matches_scalar(self):
        x = np.linspace(-1.5, 1.5, 7)
        table = cheb_u_table(6, x)
        for k in range(7):
            np.testing.assert_allclose(table[k], cheb_u(k, x))


class TestNodeSets:
    def test_single_root(self):
        roots = cheb_u_roots(1)
        assert roots.kind == NODE_KIND_ROOTS
        assert roots.n == 1
        np.testing.assert_allclose(roots.values, [0.0], atol=1e-15)

    def test_two_roots(self):
        np.testing.assert_allclose(cheb_u_roots(2).values, [0.5, -0.5])

    def test_three_roots(self):
        expected = [math.sqrt(2) / 2, 0.0, -math.sqrt(2) / 2]
        roots = cheb_u_roots(3)
        np.testing.assert_allclose(roots.values, expected, atol=1e-15)
        for x in roots.values:
            assert abs(cheb_u(3, x)) < 1e-12

    @pytest.mark.parametrize("n", range(1, 13))
    def test_roots_annihilate_and_lie_inside(self, n):
        roots = cheb_u_roots(n)
        assert np.all(np.abs(roots.values) <= 1.0)
        assert np.all(np.diff(roots.values) < 0)
        for x in roots.values:
            assert abs(cheb_u(n, x)) < 1e-10

    def test_extrema(self):
        nodes = cheb_extrema(3)
        assert nodes.kind == NODE_KIND_EXTREMA
        np.testing.assert_allclose(nodes.values, [1.0, 0.0, -1.0], atol=1e-15)
        assert cheb_extrema(5).values[0] == 1.0
        assert cheb_extrema(5).values[-1] == -1.0

    def test_extrema_requires_two_points(self):
        with pytest.raises(ValueError):
            cheb_extrema(1)


class TestNormalizedRecurrence:
    def test_hand_value(self):
        # alpha**2 - 1 at alpha = 3
        assert p_value(2, 3.0) == pytest.approx(8.0)

    def test_order_zero(self):
        assert p_value(0, 123.0) == 1.0

    def test_matches_second_kind(self):
        assert p_value(5, 1.2) == pytest.approx(cheb_u(5, 0.6), abs=1e-12)

    def test_identity_over_grid(self):
        # p_n(alpha) = U_n(alpha / 2)
        for n in range(13):
            for alpha in np.linspace(-4.0, 4.0, 33):
                assert abs(p_value(n, alpha) - cheb_u(n, alpha / 2)) < 1e-10
