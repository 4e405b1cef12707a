"""
Коэффициент квазиконформности аффинного отображения плоскости.

K = lambda_max(D D^T) / det D, что равно отношению сингулярных чисел sigma_max / sigma_min.
Независимая проверка - комплексная дилатация mu = f_zbar / f_z и K = (1 + |mu|) / (1 - |mu|).
"""

import math

from loguru import logger

from core.errors import OrientationError, PreconditionError

from schema.qc_schema import AffinePiece, QcCoefficient



def largest_gram_eigenvalue(piece: AffinePiece) -> float:
    """lambda_max(D D^T) по следу и определителю"""
    (a, b), (c, d) = piece.jacobian
    trace = a * a + b * b + c * c + d * d
    det = piece.det
    half = 0.5 * trace
    # при почти равных корнях дискриминант может уйти в -0
    disc = max(half * half - det * det, 0.0)
    return half + math.sqrt(disc)


def affine_qc_coefficient(piece: AffinePiece) -> QcCoefficient:
    det = piece.det
    if not det > 0:
        raise OrientationError(f"Affine piece {piece.region_label!r} is not orientation-preserving: det D = {det}")

    value = largest_gram_eigenvalue(piece) / det
    return QcCoefficient(value=max(value, 1.0), source="affine")


def piecewise_qc_coefficient(pieces: list[AffinePiece]) -> QcCoefficient:
    """Максимум коэффициентов по кускам"""
    if not pieces:
        raise PreconditionError("piecewise_qc_coefficient requires at least one affine piece")

    values = [affine_qc_coefficient(piece).value for piece in pieces]
    worst = max(range(len(values)), key=values.__getitem__)
    logger.debug(f"piecewise_qc_coefficient: max K={values[worst]} on piece {pieces[worst].region_label!r}")
    return QcCoefficient(value=values[worst], source="piecewise")


def beltrami_coefficient(piece: AffinePiece) -> complex:
    """mu = f_zbar / f_z для f(x, y) = D (x, y)"""
    (a, b), (c, d) = piece.jacobian
    f_z = 0.5 * complex(a + d, c - b)
    f_zbar = 0.5 * complex(a - d, c + b)
    if f_z == 0:
        raise OrientationError(f"Affine piece {piece.region_label!r} is anti-conformal")
    return f_zbar / f_z


def dilatation_from_beltrami(mu: complex) -> float:
    size = abs(mu)
    if size >= 1:
        raise OrientationError(f"|mu| = {size} >= 1: map is not orientation-preserving")
    return (1.0 + size) / (1.0 - size)
