"""
Норма оператора продолжения из единичного шара B_1 в шар B_R (формула Михлина)
и её следствие для звёздных областей.

    ||E_R||^2 = 1 + I_a(1)/I_{a+1}(1) * (I_a(R) K_{a+1}(1) + K_a(R) I_{a+1}(1))
                                       / (I_a(R) K_a(1) - K_a(R) I_a(1)),   a = (n - 2)/2

Формула относится к нормам W^1_2; значение хранится как есть, тип нормы указан в source.
"""

import math

from loguru import logger

from core.errors import DomainError

from schema.norm_schema import ExtensionNormEstimate, StarShapeData

from special_functions.bessel import bessel_i, bessel_k, half_integer_i, half_integer_k, has_closed_form



BALL_SOURCE = "mikhlin_ball[W^1_2]"
STAR_SOURCE = "mikhlin_star[W^1_2]"


def _check_dimension(n: int) -> int:
    if isinstance(n, bool) or int(n) != n or n <= 2:
        raise DomainError(f"Mikhlin's formula requires integer n > 2, got {n}")
    return int(n)


def _bessel_pair(alpha: float, closed_form: bool):
    if closed_form and has_closed_form(alpha) and has_closed_form(alpha + 1.0):
        return half_integer_i, half_integer_k
    return bessel_i, bessel_k


def mikhlin_ball_value_sq(n: int, R: float, closed_form: bool = True) -> float:
    n = _check_dimension(n)
    R = float(R)
    if not (math.isfinite(R) and R > 1.0):
        raise DomainError(f"Mikhlin's formula requires R > 1, got {R}")

    alpha = 0.5 * (n - 2)
    i_fn, k_fn = _bessel_pair(alpha, closed_form)

    i_a1, i_b1 = i_fn(alpha, 1.0), i_fn(alpha + 1.0, 1.0)
    k_a1, k_b1 = k_fn(alpha, 1.0), k_fn(alpha + 1.0, 1.0)
    i_aR, k_aR = i_fn(alpha, R), k_fn(alpha, R)

    numerator = i_aR * k_b1 + k_aR * i_b1
    denominator = i_aR * k_a1 - k_aR * i_a1
    if not denominator > 0:
        raise DomainError(f"Mikhlin denominator vanishes at R={R}")

    return 1.0 + (i_a1 / i_b1) * numerator / denominator


def mikhlin_ball_norm_sq(n: int, R: float, closed_form: bool = True) -> ExtensionNormEstimate:
    """Точный квадрат нормы продолжения W^1_2(B_1) -> W^1_2(B_R)"""
    value_sq = mikhlin_ball_value_sq(n, R, closed_form=closed_form)
    logger.debug(f"mikhlin_ball_norm_sq: n={n}, R={R} -> {value_sq}")
    return ExtensionNormEstimate(value_sq=value_sq, kind="exact", source=BALL_SOURCE)


def star_factors(data: StarShapeData) -> tuple[float, float]:
    """(N_1^2, N_2^2)"""
    m1, m2, m3, n = data.M1, data.M2, data.M3, data.n
    n1_sq = max((m1 ** 2 + (n - 1) * m3 ** 2) / m1 ** 4, 2.0 / m1 ** 2, 1.0)
    n2_sq = max(m2 ** 2 + 2.0 * (n - 1) * m3 ** 2, 2.0 * m2 ** 2, 1.0)
    return n1_sq, n2_sq


def mikhlin_star_norm_sq_bound(data: StarShapeData) -> ExtensionNormEstimate:
    """||E*||^2 <= 1 + (M2/M1)^2 (N1 N2)^2 (||E_R||^2 - 1)"""
    if not data.M1 > 0:
        raise DomainError(f"M1 must be positive, got {data.M1}")

    ball = mikhlin_ball_value_sq(data.n, data.R)
    n1_sq, n2_sq = star_factors(data)
    value_sq = 1.0 + (data.M2 / data.M1) ** 2 * n1_sq * n2_sq * (ball - 1.0)
    return ExtensionNormEstimate(value_sq=value_sq, kind="upper_bound", source=STAR_SOURCE)
