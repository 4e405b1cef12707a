import os

from loguru import logger



# Конфигурация берётся из переменных окружения, значения по умолчанию дают детерминированный запуск

DEFAULT_FLOAT_DIGITS = 10
DEFAULT_SEED = 0
DEFAULT_MAX_DOFS = 20_000

CLI_LOG_LEVEL = "WARNING"
API_LOG_LEVEL = "INFO"
API_LOG_FILE = "app.log"


def get_int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"get_int_setting: {name}={raw!r} is not an integer, using default {default}")
        return default


def get_float_digits() -> int:
    """Число значащих цифр при печати вещественных чисел"""
    digits = get_int_setting("NEUMANN_FLOAT_DIGITS", DEFAULT_FLOAT_DIGITS)
    return min(max(digits, 1), 17)


def get_seed() -> int:
    """Seed для случайного перемешивания точек в MECB"""
    return get_int_setting("NEUMANN_SEED", DEFAULT_SEED)


def get_max_dofs() -> int:
    """Предел числа степеней свободы FEM (desk scale)"""
    return get_int_setting("NEUMANN_MAX_DOFS", DEFAULT_MAX_DOFS)


def get_log_level(default: str) -> str:
    return os.getenv("NEUMANN_LOG_LEVEL", default).upper()


def get_log_file(default: str | None) -> str | None:
    return os.getenv("NEUMANN_LOG_FILE", default) or None
