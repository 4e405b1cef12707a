"""
Оценки первого нетривиального собственного значения Неймана mu_1.

Все оценки в единицах длина^-2; область внутри не масштабируется.
p = p_{n/2} - первый положительный ноль (t^{1-n/2} J_{n/2}(t))'.
"""

import math

from core.errors import DomainError, PreconditionError

from qc_maps.star import star_angle

from schema.bound_schema import LowerBound
from schema.norm_schema import ExtensionNormEstimate, StarShapeData
from schema.qc_schema import QcCoefficient

from extension_norms.mikhlin import mikhlin_star_norm_sq_bound
from extension_norms.simple import quasidisc_norm

from special_functions.roots import p_zero



def _positive(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be positive, got {value}")
    return value


def ball_mu1(n: int, R: float) -> float:
    """mu_1(B_R) = (p_{n/2} / R)^2"""
    R = _positive("R", R)
    return (p_zero(n) / R) ** 2


def theorem_a_bound(norm: ExtensionNormEstimate, R_omega: float, n: int) -> LowerBound:
    """mu_1 >= (p_{n/2} / (||E|| R_omega))^2"""
    R_omega = _positive("R_omega", R_omega)
    p = p_zero(n)
    value = p * p / (norm.value_sq * R_omega * R_omega)
    return LowerBound(
        value=value,
        formula="theorem_a",
        inputs={"n": n, "R_omega": R_omega, "norm_sq": norm.value_sq, "norm_source": norm.source},
    )


def symmetric_bound(norm: ExtensionNormEstimate, d: float, n: int) -> LowerBound:
    """Для центрально-симметричной области R_omega заменяется на d/2"""
    d = _positive("d", d)
    bound = theorem_a_bound(norm, 0.5 * d, n)
    return LowerBound(
        value=bound.value,
        formula="symmetric",
        inputs={"n": n, "d": d, "norm_sq": norm.value_sq, "norm_source": norm.source},
    )


def corollary_a_bound(K: QcCoefficient | float, R_omega: float) -> LowerBound:
    """K-квазидиск: mu_1 >= (j'_{1,1} / R_omega)^2 / (1 + K)^2"""
    norm = quasidisc_norm(K)
    bound = theorem_a_bound(norm, R_omega, 2)
    k_value = K.value if isinstance(K, QcCoefficient) else float(K)
    return LowerBound(
        value=bound.value,
        formula="corollary_a",
        inputs={"n": 2, "R_omega": bound.inputs["R_omega"], "K": k_value, "norm_sq": norm.value_sq},
    )


def star_shaped_bound(beta: float, d: float) -> LowerBound:
    """beta-звёздная (или спиральная) область: mu_1 >= 4 sin^4((1-beta) pi/4) (j'_{1,1} / d)^2"""
    theta = star_angle(beta)
    d = _positive("d", d)
    value = 4.0 * math.sin(theta) ** 4 * (p_zero(2) / d) ** 2
    return LowerBound(value=value, formula="star_shaped", inputs={"n": 2, "beta": float(beta), "d": d})


def payne_weinberger_bound(d: float) -> LowerBound:
    """Классическая оценка для выпуклых областей mu_1 >= pi^2 / d^2"""
    d = _positive("d", d)
    return LowerBound(value=math.pi ** 2 / d ** 2, formula="payne_weinberger", inputs={"d": d})


def improvement_condition(norm: ExtensionNormEstimate, n: int) -> bool:
    """Оценка через продолжение лучше Пейна-Вайнбергера при ||E|| <= 2 p_{n/2} / pi"""
    return norm.norm <= 2.0 * p_zero(n) / math.pi


def quasi_monotonicity_upper(mu1_inner: float, norm: ExtensionNormEstimate) -> float:
    """mu_1(outer) <= ||E||^2 mu_1(inner) для любой липшицевой области outer, содержащей inner"""
    mu1_inner = float(mu1_inner)
    if not (math.isfinite(mu1_inner) and mu1_inner >= 0):
        raise PreconditionError(f"mu1_inner must be finite and >= 0, got {mu1_inner}")
    return norm.value_sq * mu1_inner


def corollary_b_upper(mu1_inner: float, data: StarShapeData) -> float:
    """Звёздная область: mu_1(Omega_R) <= ||E*||^2 mu_1(Omega_1), ||E*||^2 по оценке Михлина"""
    return quasi_monotonicity_upper(mu1_inner, mikhlin_star_norm_sq_bound(data))


def poincare_constant(mu1: float) -> float:
    """B_{2,2} = mu_1^{-1/2}"""
    mu1 = float(mu1)
    if not (math.isfinite(mu1) and mu1 > 0):
        raise DomainError(f"mu1 must be positive, got {mu1}")
    return 1.0 / math.sqrt(mu1)
