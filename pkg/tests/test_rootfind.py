import math

import pytest
from hypothesis import given, strategies as st

from bohradii.errors import BracketError, NonUniqueRootError
from bohradii.rootfind import (
    Bracket,
    bisect_unique_root,
    cardano_cubic,
    polyval,
    solve_quadratic,
)

from support import bisect_oracle


class TestSolveQuadratic:
    def test_difference_of_squares(self):
        assert solve_quadratic(1.0, 0.0, -1.0) == [-1.0, 1.0]

    def test_eq21_shape_at_unit_weights(self):
        # 2r^2 + 3r - 1: roots (-3 -+ sqrt(17))/4, cross-checked by substitution
        roots = solve_quadratic(2.0, 3.0, -1.0)
        assert roots == pytest.approx(
            [(-3.0 - math.sqrt(17)) / 4.0, (math.sqrt(17) - 3.0) / 4.0], abs=1e-14
        )
        assert roots[1] == pytest.approx(0.280776, abs=1e-6)
        for r in roots:
            assert abs(polyval((2.0, 3.0, -1.0), r)) <= 1e-12

    def test_linear_fallback(self):
        assert solve_quadratic(0.0, 2.0, -1.0) == [0.5]

    def test_no_real_roots_gives_empty(self):
        assert solve_quadratic(1.0, 0.0, 1.0) == []

    def test_constant_nonzero_gives_empty(self):
        assert solve_quadratic(0.0, 0.0, 3.0) == []

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            solve_quadratic(0.0, 0.0, 0.0)

    @given(
        c2=st.floats(0.1, 10.0),
        c1=st.floats(-10.0, 10.0),
        c0=st.floats(-10.0, 10.0),
    )
    def test_vieta(self, c2, c1, c0):
        roots = solve_quadratic(c2, c1, c0)
        if len(roots) != 2:
            return
        scale = max(1.0, abs(c1 / c2), abs(c0 / c2))
        assert roots[0] + roots[1] == pytest.approx(-c1 / c2, abs=1e-12 * scale)
        assert roots[0] * roots[1] == pytest.approx(c0 / c2, abs=1e-12 * scale)


class TestBisectUniqueRoot:
    def test_area_cubic_at_unit_weights(self):
        poly = (1.0, 1.0, 3.0, -1.0)
        expected = bisect_oracle(poly, 0.0, 1.0 / 3.0)
        root = bisect_unique_root(poly, Bracket(0.0, 1.0 / 3.0))
        assert root.value == pytest.approx(expected, abs=1e-12)
        assert root.value == pytest.approx(0.29560, abs=1e-5)
        assert root.residual <= 1e-10
        assert root.bracket.width <= 1e-13
        assert root.bracket.lo <= root.value <= root.bracket.hi

    def test_linear(self):
        root = bisect_unique_root((2.0, -1.0), Bracket(0.0, 1.0))
        assert root.value == pytest.approx(0.5, abs=1e-13)

    def test_factored_cubic(self):
        # 2r^3 + r^2 - 4r + 1 = (2r^2 + 3r - 1)(r - 1)
        root = bisect_unique_root((2.0, 1.0, -4.0, 1.0), Bracket(0.0, 0.5))
        assert root.value == pytest.approx((math.sqrt(17) - 3.0) / 4.0, abs=1e-12)

    def test_exact_zero_at_endpoint(self):
        root = bisect_unique_root((1.0, -0.5), Bracket(0.0, 0.5))
        assert root.value == 0.5
        assert root.residual == 0.0

    def test_no_sign_change_rejected(self):
        with pytest.raises(BracketError):
            bisect_unique_root((1.0, 0.0, 1.0), Bracket(0.0, 1.0))

    def test_multiple_roots_rejected(self):
        # (r - 0.2)(r - 0.5)(r - 0.8): three crossings inside (0, 1)
        with pytest.raises(NonUniqueRootError):
            bisect_unique_root((1.0, -1.5, 0.66, -0.08), Bracket(0.0, 1.0))

    def test_deterministic(self):
        poly = (1.0, 1.0, 3.0, -1.0)
        a = bisect_unique_root(poly, Bracket(0.0, 1.0 / 3.0))
        b = bisect_unique_root(poly, Bracket(0.0, 1.0 / 3.0))
        assert a == b


class TestCardanoCubic:
    def test_perfect_cube(self):
        assert cardano_cubic(1.0, 0.0, 0.0, -8.0) == pytest.approx([2.0], abs=1e-12)

    def test_single_real_root_matches_bisection(self):
        roots = cardano_cubic(1.0, 1.0, 3.0, -1.0)
        assert len(roots) == 1
        expected = bisect_oracle((1.0, 1.0, 3.0, -1.0), 0.0, 1.0 / 3.0)
        assert roots[0] == pytest.approx(expected, abs=1e-9)

    def test_three_real_roots(self):
        roots = cardano_cubic(2.0, 1.0, -4.0, 1.0)
        expected = [(-3.0 - math.sqrt(17)) / 4.0, (math.sqrt(17) - 3.0) / 4.0, 1.0]
        assert roots == pytest.approx(expected, abs=1e-9)
        for r in roots:
            assert abs(polyval((2.0, 1.0, -4.0, 1.0), r)) <= 1e-9

    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(ValueError):
            cardano_cubic(0.0, 1.0, 1.0, 1.0)

    @pytest.mark.parametrize("alpha,beta", [
        (1.0, 1.0), (0.5, 2.0), (1.0, 2.0), (0.3, 0.3), (0.8, 1.6), (0.2, 4.0),
    ])
    def test_agrees_with_bisection_on_derivative_family_cubic(self, alpha, beta):
        poly = (4.0 - 2.0 * alpha, 2.0 + 2.0 * beta - 3.0 * alpha,
                -(2.0 * beta + 2.0), alpha)
        bis = bisect_unique_root(poly, Bracket(0.0, 0.5)).value
        matches = [r for r in cardano_cubic(*poly) if abs(r - bis) < 1e-6]
        assert matches and matches[0] == pytest.approx(bis, abs=1e-9)

    @pytest.mark.parametrize("alpha,beta", [
        (1.0, 1.0), (1.0, 8.0 / 9.0), (0.5, 0.9), (0.25, 3.0), (0.7, 0.7),
    ])
    def test_agrees_with_bisection_on_area_family_cubic(self, alpha, beta):
        poly = (alpha, alpha, 4.0 * beta - alpha, -alpha)
        bis = bisect_unique_root(poly, Bracket(0.0, 1.0 / 3.0 + 1e-9)).value
        matches = [r for r in cardano_cubic(*poly) if abs(r - bis) < 1e-6]
        assert matches and matches[0] == pytest.approx(bis, abs=1e-9)
