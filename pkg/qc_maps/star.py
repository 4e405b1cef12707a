"""
K для beta-звёздных и beta-спиральных областей: граница - K-квазиокружность
с K = cot^2((1 - beta) pi / 4). Для спирали gamma только проверяется, |gamma| < beta pi / 2.
"""

import math

from core.errors import DomainError

from schema.qc_schema import QcCoefficient



def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not (math.isfinite(beta) and 0.0 <= beta < 1.0):
        raise DomainError(f"beta must lie in [0, 1), got {beta}")
    return beta


def star_angle(beta: float) -> float:
    """theta = (1 - beta) pi / 4"""
    return (1.0 - _check_beta(beta)) * math.pi / 4.0


def star_shaped_K(beta: float) -> QcCoefficient:
    theta = star_angle(beta)
    return QcCoefficient(value=max(1.0 / math.tan(theta) ** 2, 1.0), source="star_beta")


def spiral_shaped_K(beta: float, gamma: float) -> QcCoefficient:
    beta = _check_beta(beta)
    gamma = float(gamma)
    if not math.isfinite(gamma) or abs(gamma) >= beta * math.pi / 2.0:
        raise DomainError(f"Spiral angle requires |gamma| < beta*pi/2 = {beta * math.pi / 2.0}, got {gamma}")

    theta = star_angle(beta)
    return QcCoefficient(value=max(1.0 / math.tan(theta) ** 2, 1.0), source="spiral_beta")
