import math

import pytest

from scipy import special

from core.errors import DomainError, PreconditionError, RangeError

from schema.special_schema import RootBracket

from special_functions.bessel import (
    bessel_i,
    bessel_i_series,
    bessel_j,
    bessel_j_series,
    bessel_k,
    bessel_k_reflection,
    half_integer_i,
    half_integer_j,
    half_integer_k,
)
from special_functions.roots import find_root, p_zero, p_zero_residual



HALF_ORDERS = (0.5, 1.5, 2.5)
SAMPLE_POINTS = (0.5, 1.0, 2.0, 3.0)


class TestBesselValues:

    def test_j_at_zero(self):
        assert bessel_j(0, 0) == 1.0
        assert bessel_j(1.5, 0) == 0.0

    def test_j_half_order(self):
        assert bessel_j(0.5, 1) == pytest.approx(math.sqrt(2 / math.pi) * math.sin(1), abs=1e-12)
        assert bessel_j(0.5, 1) == pytest.approx(0.6713967, abs=1e-7)

    def test_j1_derivative_vanishes_at_first_extremum(self):
        t = 1.8411838
        assert abs(t * bessel_j(0, t) - bessel_j(1, t)) < 1e-6

    def test_i_values(self):
        assert bessel_i(0, 0) == 1.0
        assert bessel_i(0.5, 1) == pytest.approx(0.9376748, abs=1e-7)
        assert bessel_i(1.5, 1) == pytest.approx(0.2935254, abs=1e-7)

    def test_k_values(self):
        assert bessel_k(0.5, 1) == pytest.approx(0.4610685, abs=1e-7)
        assert bessel_k(1.5, 1) == pytest.approx(0.9221370, abs=1e-7)
        assert bessel_k(0.5, 3) == pytest.approx(0.0360271, abs=1e-7)

    @pytest.mark.parametrize("nu", [0, 0.5, 1, 2.5, 4, 7.3])
    @pytest.mark.parametrize("x", [0.1, 1.0, 4.5, 11.9, 12.5, 20.0, 49.0])
    def test_j_against_scipy(self, nu, x):
        assert bessel_j(nu, x) == pytest.approx(special.jv(nu, x), abs=1e-11)

    @pytest.mark.parametrize("nu", [0, 0.5, 1.5, 3, 10.25])
    @pytest.mark.parametrize("x", [0.2, 1.0, 5.0, 29.0, 45.0])
    def test_i_against_scipy(self, nu, x):
        assert bessel_i(nu, x) == pytest.approx(special.iv(nu, x), rel=1e-12)

    @pytest.mark.parametrize("nu", [0, 1, 2, 3, 5, 0.5, 1.5, 2.5, 0.3, 4.7, 2.0005, 12.5])
    @pytest.mark.parametrize("x", [0.3, 1.0, 2.5, 5.9, 8.0, 20.0])
    def test_k_against_scipy(self, nu, x):
        assert bessel_k(nu, x) == pytest.approx(special.kv(nu, x), rel=1e-10)


class TestHalfIntegerConsistency:

    @pytest.mark.parametrize("nu", HALF_ORDERS)
    @pytest.mark.parametrize("x", SAMPLE_POINTS)
    def test_series_match_closed_forms(self, nu, x):
        assert bessel_j_series(nu, x) == pytest.approx(half_integer_j(nu, x), rel=1e-10)
        assert bessel_i_series(nu, x) == pytest.approx(half_integer_i(nu, x), rel=1e-10)
        assert bessel_k_reflection(nu, x) == pytest.approx(half_integer_k(nu, x), rel=1e-10)

    @pytest.mark.parametrize("nu", [0.5, 1.5])
    @pytest.mark.parametrize("x", [1.0, 2.0, 3.0])
    def test_wronskian(self, nu, x):
        value = bessel_i(nu, x) * bessel_k(nu + 1, x) + bessel_i(nu + 1, x) * bessel_k(nu, x)
        assert value == pytest.approx(1.0 / x, rel=1e-9)

    def test_closed_form_rejects_other_orders(self):
        with pytest.raises(DomainError):
            half_integer_i(3.5, 1.0)


class TestBesselErrors:

    @pytest.mark.parametrize("nu, x", [(math.nan, 1.0), (1.0, math.inf), (-0.5, 1.0), (41.0, 1.0)])
    def test_invalid_input_is_domain_error(self, nu, x):
        with pytest.raises(DomainError):
            bessel_j(nu, x)

    def test_k_requires_positive_argument(self):
        with pytest.raises(DomainError):
            bessel_k(0.5, 0.0)
        with pytest.raises(DomainError):
            bessel_k(1.0, -1.0)

    def test_i_overflow_is_range_error(self):
        with pytest.raises(RangeError):
            bessel_i(0.0, 701.0)

    def test_closed_form_overflow_is_range_error(self):
        with pytest.raises(RangeError):
            half_integer_i(0.5, 800.0)

    def test_domain_error_is_value_error(self):
        with pytest.raises(ValueError):
            bessel_i(0.0, -1.0)


class TestRoots:

    def test_linear(self):
        f = lambda t: t - 1
        assert find_root(f, RootBracket.from_function(f, 0.0, 2.0), 1e-12) == pytest.approx(1.0, abs=1e-12)

    def test_sqrt_two(self):
        f = lambda t: t * t - 2
        assert find_root(f, RootBracket.from_function(f, 1.0, 2.0), 1e-10) == pytest.approx(math.sqrt(2), abs=1e-8)

    def test_bessel_proxy_matches_p_zero(self):
        f = lambda t: t * bessel_j(0, t) - bessel_j(1, t)
        root = find_root(f, RootBracket.from_function(f, 1.0, 3.0), 1e-12)
        assert root == pytest.approx(1.8411838, abs=1e-6)
        assert root == pytest.approx(p_zero(2), abs=1e-9)

    def test_bracket_without_sign_change(self):
        f = lambda t: t * t + 1
        with pytest.raises(PreconditionError):
            find_root(f, RootBracket.from_function(f, -1.0, 1.0), 1e-10)

    def test_root_at_endpoint(self):
        f = lambda t: t - 1
        assert find_root(f, RootBracket.from_function(f, 1.0, 3.0), 1e-12) == 1.0
        assert find_root(f, RootBracket.from_function(f, -2.0, 1.0), 1e-12) == 1.0

    @pytest.mark.parametrize("lo, hi", [(1.0, 0.0), (1.0, 1.0)])
    def test_reversed_bracket_rejected_before_endpoint_check(self, lo, hi):
        f = lambda t: t - 1
        with pytest.raises(PreconditionError):
            find_root(f, RootBracket.from_function(f, lo, hi), 1e-12)

    def test_non_positive_tolerance(self):
        f = lambda t: t
        with pytest.raises(PreconditionError):
            find_root(f, RootBracket.from_function(f, -1.0, 1.0), 0.0)

    def test_deterministic(self):
        f = lambda t: math.cos(t) - t
        bracket = RootBracket.from_function(f, 0.0, 1.0)
        assert find_root(f, bracket, 1e-12) == find_root(f, bracket, 1e-12)


class TestPZero:

    @pytest.mark.parametrize("n, expected", [(2, 1.841), (3, 2.081), (4, 2.299), (5, 2.501),
                                             (6, 2.688), (7, 2.864), (8, 3.031)])
    def test_published_table(self, n, expected):
        assert p_zero(n) == pytest.approx(expected, abs=1e-3)

    def test_strictly_increasing(self):
        values = [p_zero(n) for n in range(2, 9)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("n", range(2, 9))
    def test_residual(self, n):
        assert abs(p_zero_residual(n, p_zero(n))) < 1e-9

    def test_planar_value_is_first_zero_of_j1_derivative(self):
        assert p_zero(2) == pytest.approx(special.jnp_zeros(1, 1)[0], abs=1e-10)

    def test_higher_dimension(self):
        assert p_zero(8) < p_zero(20) < 20

    @pytest.mark.parametrize("n", [1, 0, -3, 2.5])
    def test_invalid_dimension(self, n):
        with pytest.raises(DomainError):
            p_zero(n)
