"""
Корни: find_root на отрезке со сменой знака и p_{n/2} - первый положительный ноль
функции (t^{1-n/2} J_{n/2}(t))'.

Сведение: по формуле J_nu'(t) = (nu/t) J_nu(t) - J_{nu+1}(t)
    (t^{1-nu} J_nu(t))' = t^{-nu} (J_nu(t) - t J_{nu+1}(t)),
поэтому p_{n/2} - наименьший t > 0 с J_{n/2}(t) - t J_{n/2+1}(t) = 0.
При n = 2 это j'_{1,1}, первый ноль J_1'.
"""

from functools import lru_cache
from typing import Callable

import numpy as np

from loguru import logger

from scipy import optimize

from core.errors import DomainError, PreconditionError, RootNotBracketedError

from schema.special_schema import RootBracket, is_finite

from special_functions.bessel import bessel_j



SCAN_STEP = 0.05
SCAN_MAX = 20.0
P_ZERO_TOL = 1e-12


def find_root(f: Callable[[float], float], bracket: RootBracket, tol: float) -> float:
    """Корень f на отрезке со сменой знака (метод Брента, детерминированный)"""
    if not (tol > 0 and is_finite(tol)):
        raise PreconditionError(f"Tolerance must be positive, got {tol}")
    if not bracket.hi > bracket.lo:
        raise PreconditionError(f"Bracket must satisfy lo < hi, got [{bracket.lo}, {bracket.hi}]")
    if bracket.f_lo == 0.0:
        return bracket.lo
    if bracket.f_hi == 0.0:
        return bracket.hi
    if not bracket.has_sign_change():
        raise PreconditionError(
            f"No sign change on [{bracket.lo}, {bracket.hi}]: f_lo={bracket.f_lo}, f_hi={bracket.f_hi}"
        )

    root, info = optimize.brentq(
        f, bracket.lo, bracket.hi, xtol=tol, maxiter=200, full_output=True
    )
    logger.debug(f"find_root: {info.iterations} iterations, root {root}")
    return float(root)


def p_zero_residual(n: int, t: float) -> float:
    """J_{n/2}(t) - t J_{n/2+1}(t)"""
    nu = 0.5 * n
    return bessel_j(nu, t) - t * bessel_j(nu + 1.0, t)


@lru_cache(maxsize=None)
def _p_zero(n: int) -> float:
    def f(t: float) -> float:
        return p_zero_residual(n, t)

    grid = np.arange(1, int(round(SCAN_MAX / SCAN_STEP)) + 1) * SCAN_STEP
    t_prev = float(grid[0])
    f_prev = f(t_prev)
    for t in grid[1:]:
        t = float(t)
        f_curr = f(t)
        if f_prev * f_curr <= 0:
            bracket = RootBracket(lo=t_prev, hi=t, f_lo=f_prev, f_hi=f_curr)
            return find_root(f, bracket, P_ZERO_TOL)
        t_prev, f_prev = t, f_curr

    raise RootNotBracketedError(f"p_zero({n}): no sign change on (0, {SCAN_MAX}]")


def p_zero(n: int) -> float:
    """Первый положительный ноль (t^{1-n/2} J_{n/2}(t))' для размерности n >= 2"""
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"Dimension must be an integer, got {n}")
    n = int(n)
    if n < 2:
        raise DomainError(f"Dimension must be >= 2, got {n}")
    if 0.5 * n + 1.0 > 40:
        raise DomainError(f"Dimension {n} needs Bessel order above 40")
    return _p_zero(n)
