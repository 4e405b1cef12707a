import math

import pytest

from pydantic import ValidationError

from core.errors import DomainError

from extension_norms.mikhlin import (
    mikhlin_ball_norm_sq,
    mikhlin_ball_value_sq,
    mikhlin_star_norm_sq_bound,
    star_factors,
)
from extension_norms.simple import half_ball_reflection_norm, quasidisc_norm, user_norm

from schema.norm_schema import StarShapeData
from schema.qc_schema import QcCoefficient



class TestMikhlinBall:

    def test_published_values(self):
        assert mikhlin_ball_norm_sq(3, 2).value_sq == pytest.approx(8.38905, abs=1e-4)
        assert mikhlin_ball_norm_sq(3, 3).value_sq == pytest.approx(7.50825, abs=1e-4)

    def test_exact_kind(self):
        estimate = mikhlin_ball_norm_sq(3, 2)
        assert estimate.kind == "exact"
        assert "W^1_2" in estimate.source

    def test_blows_up_near_one(self):
        assert mikhlin_ball_norm_sq(3, 1.0001).value_sq > 1e4

    @pytest.mark.parametrize("R", [1.0, 0.5, math.inf])
    def test_radius_must_exceed_one(self, R):
        with pytest.raises(DomainError):
            mikhlin_ball_norm_sq(3, R)

    @pytest.mark.parametrize("n", [2, 1, 3.5])
    def test_dimension(self, n):
        with pytest.raises(DomainError):
            mikhlin_ball_norm_sq(n, 2.0)

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_decreasing_in_radius(self, n):
        values = [mikhlin_ball_norm_sq(n, R).value_sq for R in (1.1, 1.5, 2.0, 3.0, 5.0, 8.0)]
        assert all(a > b for a, b in zip(values, values[1:]))
        assert all(v > 1 for v in values)

    @pytest.mark.parametrize("n", [3, 5])
    @pytest.mark.parametrize("R", [1.2, 2.0, 4.0])
    def test_closed_forms_agree_with_series(self, n, R):
        assert mikhlin_ball_value_sq(n, R, closed_form=True) == pytest.approx(
            mikhlin_ball_value_sq(n, R, closed_form=False), rel=1e-9
        )


class TestMikhlinStar:

    @pytest.mark.parametrize("m1, m2, m3, R, expected", [
        (1, 1, 0, 2, 30.5562),
        (1, 1, 0, 3, 27.0330),
        (2, 2, 0, 2, 60.1124),
    ])
    def test_worked_examples(self, m1, m2, m3, R, expected):
        data = StarShapeData(M1=m1, M2=m2, M3=m3, n=3, R=R)
        estimate = mikhlin_star_norm_sq_bound(data)
        assert estimate.value_sq == pytest.approx(expected, abs=1e-3)
        assert estimate.kind == "upper_bound"

    def test_factors(self):
        assert star_factors(StarShapeData(M1=1, M2=2, M3=1, n=3, R=2)) == pytest.approx((3.0, 8.0))

    def test_ball_is_reproduced(self):
        data = StarShapeData(M1=1, M2=1, M3=0, n=3, R=2)
        # N1^2 = N2^2 = 2 при M1 = M2 = 1, M3 = 0
        ball = mikhlin_ball_norm_sq(3, 2).value_sq
        assert mikhlin_star_norm_sq_bound(data).value_sq == pytest.approx(1 + 4 * (ball - 1))

    def test_radii_order(self):
        with pytest.raises(ValidationError):
            StarShapeData(M1=2, M2=1, M3=0, n=3, R=2)

    def test_planar_rejected(self):
        with pytest.raises(ValidationError):
            StarShapeData(M1=1, M2=1, M3=0, n=2, R=2)


class TestSimpleNorms:

    def test_quasidisc(self):
        assert quasidisc_norm(1.0).norm == pytest.approx(2.0)
        assert quasidisc_norm(QcCoefficient(value=3.0, source="user")).value_sq == pytest.approx(16.0)

    def test_quasidisc_invalid(self):
        with pytest.raises(DomainError):
            quasidisc_norm(0.5)

    def test_half_ball(self):
        estimate = half_ball_reflection_norm()
        assert estimate.value_sq == 2.0
        assert estimate.kind == "exact"

    def test_user_norm_at_least_one(self):
        with pytest.raises(ValidationError):
            user_norm(0.9)
