import sys

from loguru import logger

from core.config import get_log_file, get_log_level



def configure_logging(default_level: str, default_file: str | None = None) -> None:
    """Настройка логгирования с помощью библиотеки loguru"""
    logger.remove()
    logger.add(sys.stderr, level=get_log_level(default_level))

    log_file = get_log_file(default_file)
    if log_file:
        logger.add(
            log_file,
            rotation="10 MB",
            retention="30 days",
            level="INFO",
            backtrace=True,
            diagnose=True
        )
