"""
Функции Бесселя J_nu, I_nu, K_nu вещественного порядка nu >= 0 и вещественного аргумента.

J и I считаются степенным рядом
    J_nu(x) = sum_m (-1)^m (x/2)^(2m+nu) / (m! Gamma(m+nu+1)),
    I_nu(x) = sum_m        (x/2)^(2m+nu) / (m! Gamma(m+nu+1)),
вне области ряда используется scipy.special (AMOS/Cephes).
K для нецелого порядка считается по формуле отражения
    K_nu = (pi/2) (I_{-nu} - I_nu) / sin(nu pi),
для целого порядка - восходящей рекуррентностью от K_0, K_1.
"""

import math

from loguru import logger

from scipy import special

from core.errors import DomainError, NumericalError, RangeError



MAX_ORDER = 40.0

# Ряд для J теряет точность из-за сокращений при больших x
J_SERIES_LIMIT = 12.0

# У ряда для I все члены положительные, сокращений нет
I_SERIES_LIMIT = 30.0

# I_nu(x) ~ e^x / sqrt(2 pi x) переполняет double при x ~ 713
I_OVERFLOW_LIMIT = 700.0

# Формула отражения для K: потеря точности растёт как I_nu(x) / K_nu(x) ~ e^(2x)
K_REFLECTION_LIMIT = 6.0

# Порядки ближе этого к целому считаются через scipy.special.kv
NEAR_INTEGER = 1e-3

MAX_TERMS = 500
_TERM_EPS = 1e-17


def _check_order(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu < 0:
        raise DomainError(f"Bessel order must be finite and >= 0, got {nu}")
    if nu > MAX_ORDER:
        raise DomainError(f"Bessel order {nu} exceeds supported maximum {MAX_ORDER}")
    return nu


def _check_argument(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"Bessel argument must be finite, got {x}")
    return x


def _is_half_integer(nu: float) -> bool:
    return (2.0 * nu).is_integer() and not nu.is_integer()


def _power_series(nu: float, x: float, alternating: bool) -> float:
    """Степенной ряд для J (alternating) или I; nu может быть отрицательным нецелым"""
    half = 0.5 * x
    step = -half * half if alternating else half * half

    term = half ** nu * special.rgamma(nu + 1.0)
    total = term
    peak = abs(term)
    for m in range(1, MAX_TERMS):
        term *= step / (m * (m + nu))
        total += term
        peak = max(peak, abs(term))
        if m > half and abs(term) <= _TERM_EPS * peak:
            return float(total)

    raise NumericalError(f"Power series for order {nu} at x={x} did not converge in {MAX_TERMS} terms")


def bessel_j_series(nu: float, x: float) -> float:
    """J_nu(x) только степенным рядом"""
    nu = _check_order(nu)
    x = _check_argument(x)
    if x < 0:
        raise DomainError(f"bessel_j requires x >= 0, got {x}")
    return _power_series(nu, x, alternating=True)


def bessel_i_series(nu: float, x: float) -> float:
    """I_nu(x) только степенным рядом"""
    nu = _check_order(nu)
    x = _check_argument(x)
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    return _power_series(nu, x, alternating=False)


def bessel_j(nu: float, x: float) -> float:
    """Функция Бесселя первого рода J_nu(x), x >= 0"""
    nu = _check_order(nu)
    x = _check_argument(x)
    if x < 0:
        raise DomainError(f"bessel_j requires x >= 0, got {x}")
    if x <= J_SERIES_LIMIT:
        return _power_series(nu, x, alternating=True)
    return float(special.jv(nu, x))


def bessel_i(nu: float, x: float) -> float:
    """Модифицированная функция Бесселя I_nu(x), x >= 0"""
    nu = _check_order(nu)
    x = _check_argument(x)
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    if x > I_OVERFLOW_LIMIT:
        raise RangeError(f"I_{nu}({x}) overflows double precision (threshold x <= {I_OVERFLOW_LIMIT})")
    if x <= I_SERIES_LIMIT:
        return _power_series(nu, x, alternating=False)

    value = float(special.iv(nu, x))
    if not math.isfinite(value):
        raise RangeError(f"I_{nu}({x}) is not representable")
    return value


def bessel_k_reflection(nu: float, x: float) -> float:
    """K_nu(x) по формуле отражения через ряды I_{-nu}, I_nu; только нецелый nu"""
    nu = _check_order(nu)
    x = _check_argument(x)
    if x <= 0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")
    if nu.is_integer():
        raise DomainError(f"Reflection formula is singular at integer order {nu}")

    i_minus = _power_series(-nu, x, alternating=False)
    i_plus = _power_series(nu, x, alternating=False)
    return 0.5 * math.pi * (i_minus - i_plus) / math.sin(nu * math.pi)


def _bessel_k_integer(order: int, x: float) -> float:
    # Восходящая рекуррентность K_{v+1} = K_{v-1} + (2v/x) K_v устойчива
    k_prev = float(special.k0(x))
    if order == 0:
        return k_prev
    k_curr = float(special.k1(x))
    for v in range(1, order):
        k_prev, k_curr = k_curr, k_prev + (2.0 * v / x) * k_curr
    return k_curr


def bessel_k(nu: float, x: float) -> float:
    """Модифицированная функция Бесселя второго рода K_nu(x), x > 0"""
    nu = _check_order(nu)
    x = _check_argument(x)
    if x <= 0:
        raise DomainError(f"bessel_k requires x > 0, got {x}")

    if nu.is_integer():
        return _bessel_k_integer(int(nu), x)
    if x <= K_REFLECTION_LIMIT and abs(nu - round(nu)) > NEAR_INTEGER:
        return bessel_k_reflection(nu, x)

    logger.debug(f"bessel_k: order {nu} at x={x} delegated to scipy.special.kv")
    return float(special.kv(nu, x))


def _check_half_integer(nu: float, x: float) -> tuple[float, float]:
    nu = _check_order(nu)
    x = _check_argument(x)
    if nu not in (0.5, 1.5, 2.5):
        raise DomainError(f"Closed form available for orders 1/2, 3/2, 5/2 only, got {nu}")
    if x <= 0:
        raise DomainError(f"Closed forms require x > 0, got {x}")
    return nu, x


def half_integer_j(nu: float, x: float) -> float:
    """Замкнутая форма J_nu для nu = 1/2, 3/2, 5/2"""
    nu, x = _check_half_integer(nu, x)
    scale = math.sqrt(2.0 / (math.pi * x))
    s, c = math.sin(x), math.cos(x)
    if nu == 0.5:
        return scale * s
    if nu == 1.5:
        return scale * (s / x - c)
    return scale * ((3.0 / x**2 - 1.0) * s - 3.0 * c / x)


def half_integer_i(nu: float, x: float) -> float:
    """Замкнутая форма I_nu для nu = 1/2, 3/2, 5/2"""
    nu, x = _check_half_integer(nu, x)
    if x > I_OVERFLOW_LIMIT:
        raise RangeError(f"I_{nu}({x}) overflows double precision (threshold x <= {I_OVERFLOW_LIMIT})")
    scale = math.sqrt(2.0 / (math.pi * x))
    sh, ch = math.sinh(x), math.cosh(x)
    if nu == 0.5:
        return scale * sh
    if nu == 1.5:
        return scale * (ch - sh / x)
    return scale * ((1.0 + 3.0 / x**2) * sh - 3.0 * ch / x)


def half_integer_k(nu: float, x: float) -> float:
    """Замкнутая форма K_nu для nu = 1/2, 3/2, 5/2"""
    nu, x = _check_half_integer(nu, x)
    base = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)
    if nu == 0.5:
        return base
    if nu == 1.5:
        return base * (1.0 + 1.0 / x)
    return base * (1.0 + 3.0 / x + 3.0 / x**2)


def has_closed_form(nu: float) -> bool:
    return float(nu) in (0.5, 1.5, 2.5)
