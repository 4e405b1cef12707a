from core.errors import DomainError

from schema.norm_schema import ExtensionNormEstimate
from schema.qc_schema import QcCoefficient



def quasidisc_norm(K: QcCoefficient | float) -> ExtensionNormEstimate:
    """||E|| <= 1 + K для K-квазидиска"""
    value = K.value if isinstance(K, QcCoefficient) else float(K)
    if not value >= 1.0:
        raise DomainError(f"Quasiconformality coefficient must be >= 1, got {value}")
    return ExtensionNormEstimate(value_sq=(1.0 + value) ** 2, kind="upper_bound", source="quasidisc_1_plus_K")


def half_ball_reflection_norm() -> ExtensionNormEstimate:
    """Чётное отражение через плоскость разреза удваивает энергию: ||E||^2 = 2 в любой размерности"""
    return ExtensionNormEstimate(value_sq=2.0, kind="exact", source="half_ball_reflection")


def user_norm(value_sq: float) -> ExtensionNormEstimate:
    return ExtensionNormEstimate(value_sq=value_sq, kind="upper_bound", source="user")
