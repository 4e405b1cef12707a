import math

import numpy as np
import pytest

from pydantic import ValidationError

from core.errors import DomainError, OrientationError, PreconditionError

from geometry.named import BOWTIE_VERTICES

from qc_maps.affine import (
    affine_qc_coefficient,
    beltrami_coefficient,
    dilatation_from_beltrami,
    piecewise_qc_coefficient,
)
from qc_maps.bowtie import bowtie_map, bowtie_pieces
from qc_maps.star import spiral_shaped_K, star_shaped_K

from schema.qc_schema import AffinePiece



def piece(matrix) -> AffinePiece:
    return AffinePiece(jacobian=np.asarray(matrix, dtype=float).tolist())


class TestAffine:

    def test_shear(self):
        assert affine_qc_coefficient(piece([[1, 0], [1, 1]])).value == pytest.approx(2.618034, abs=1e-6)

    def test_diagonal_stretch(self):
        assert affine_qc_coefficient(piece([[3, 0], [0, 1]])).value == pytest.approx(3.0, abs=1e-12)

    def test_identity(self):
        assert affine_qc_coefficient(piece([[1, 0], [0, 1]])).value == 1.0

    def test_orientation_reversing(self):
        with pytest.raises(OrientationError):
            affine_qc_coefficient(piece([[1, 0], [0, -1]]))

    def test_singular(self):
        with pytest.raises(OrientationError):
            affine_qc_coefficient(piece([[1, 2], [2, 4]]))

    def test_bad_shape(self):
        with pytest.raises(ValidationError):
            AffinePiece(jacobian=[[1, 0, 0], [0, 1, 0]])

    def test_conformal_matrices(self, rng):
        for _ in range(50):
            a, b = rng.standard_normal(2)
            K = affine_qc_coefficient(piece([[a, -b], [b, a]])).value
            assert K == pytest.approx(1.0, abs=1e-12)

    def test_scale_and_rotation_invariance(self, rng):
        for _ in range(50):
            matrix = rng.standard_normal((2, 2))
            if np.linalg.det(matrix) <= 0.05:
                continue
            K = affine_qc_coefficient(piece(matrix)).value
            angle = rng.uniform(0, 2 * math.pi)
            rotation = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
            scale = rng.uniform(0.1, 10)
            assert affine_qc_coefficient(piece(scale * matrix)).value == pytest.approx(K, rel=1e-10)
            assert affine_qc_coefficient(piece(rotation @ matrix)).value == pytest.approx(K, rel=1e-10)
            assert affine_qc_coefficient(piece(matrix @ rotation)).value == pytest.approx(K, rel=1e-10)

    def test_matches_singular_values(self, rng):
        for _ in range(50):
            matrix = rng.standard_normal((2, 2))
            if np.linalg.det(matrix) <= 0.05:
                continue
            sigma = np.linalg.svd(matrix, compute_uv=False)
            assert affine_qc_coefficient(piece(matrix)).value == pytest.approx(sigma[0] / sigma[1], rel=1e-9)

    def test_beltrami_cross_check(self, rng):
        for _ in range(50):
            matrix = rng.standard_normal((2, 2))
            if np.linalg.det(matrix) <= 0.05:
                continue
            p = piece(matrix)
            K_beltrami = dilatation_from_beltrami(beltrami_coefficient(p))
            assert K_beltrami == pytest.approx(affine_qc_coefficient(p).value, rel=1e-9)

    def test_beltrami_of_conformal_map_vanishes(self):
        assert abs(beltrami_coefficient(piece([[2, -1], [1, 2]]))) == pytest.approx(0.0)


class TestPiecewise:

    def test_bowtie(self):
        K = piecewise_qc_coefficient(bowtie_pieces())
        assert K.value == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-12)
        assert K.source == "piecewise"

    def test_empty(self):
        with pytest.raises(PreconditionError):
            piecewise_qc_coefficient([])

    def test_one_bad_piece_fails_all(self):
        with pytest.raises(OrientationError):
            piecewise_qc_coefficient([piece([[1, 0], [0, 1]]), piece([[0, 1], [1, 0]])])

    def test_bowtie_map_corners(self):
        square = [(-0.5, 0.0), (0.0, 0.0), (0.5, 0.0), (0.5, 1.0), (0.0, 1.0), (-0.5, 1.0)]
        assert np.allclose(bowtie_map(square), BOWTIE_VERTICES)


class TestStarShaped:

    def test_disc(self):
        assert star_shaped_K(0).value == pytest.approx(1.0)

    def test_half(self):
        assert star_shaped_K(0.5).value == pytest.approx(3 + 2 * math.sqrt(2), abs=1e-9)

    def test_near_one(self):
        assert star_shaped_K(0.9).value == pytest.approx(161.45, abs=0.01)

    def test_increasing(self):
        values = [star_shaped_K(beta).value for beta in np.linspace(0, 0.95, 20)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("beta", [1.0, -0.1, math.nan])
    def test_invalid_beta(self, beta):
        with pytest.raises(DomainError):
            star_shaped_K(beta)

    def test_spiral(self):
        assert spiral_shaped_K(0.2, 0).value == pytest.approx(1.8944, abs=1e-4)
        assert spiral_shaped_K(0.2, 0.3).value == spiral_shaped_K(0.2, 0).value

    def test_spiral_angle_limit(self):
        with pytest.raises(DomainError):
            spiral_shaped_K(0.2, 0.2 * math.pi / 2)
