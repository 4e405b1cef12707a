import os
import sys

# API тесты импортируют main: без файлового лога
os.environ.setdefault("NEUMANN_LOG_FILE", "")

import numpy as np
import pytest

from loguru import logger

from geometry.named import named_spec

from schema.domain_schema import DomainSpec



@pytest.fixture(autouse=True)
def stderr_logging():
    """CLI подменяет sys.stderr; после теста возвращаем обычный sink"""
    yield
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unit_square() -> DomainSpec:
    return named_spec("unit_square")


@pytest.fixture
def bowtie() -> DomainSpec:
    return named_spec("bowtie")


@pytest.fixture
def unit_disc() -> DomainSpec:
    return named_spec("unit_disc", samples=64)


@pytest.fixture
def half_disc() -> DomainSpec:
    return named_spec("half_disc", samples=64)


@pytest.fixture
def tan_disc() -> DomainSpec:
    return named_spec("tan_disc", samples=64)


@pytest.fixture
def write_json(tmp_path):
    """Пишет JSON документ во временный файл и возвращает путь"""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
