"""Иерархия ошибок: InputError -> exit 1 / HTTP 422, численные сбои -> exit 2 / HTTP 500"""



class NeumannError(Exception):
    """Базовая ошибка проекта"""


class InputError(NeumannError, ValueError):
    """Некорректные входные данные"""


class DomainError(InputError):
    """Аргумент вне математической области определения"""


class OrientationError(DomainError):
    """Аффинная карта меняет ориентацию (det D <= 0)"""


class PreconditionError(InputError):
    """Нарушен контракт вызова"""


class ConfigurationError(InputError):
    """Неподдерживаемая конфигурация области или команды"""


class StarShapednessError(InputError):
    """Область не звёздна относительно якоря"""

    def __init__(self, message: str, boundary_index: int):
        super().__init__(message)
        self.boundary_index = boundary_index


class DegenerateFunctionError(InputError):
    """Нулевой знаменатель отношения Рэлея"""


class RangeError(NeumannError, OverflowError):
    """Переполнение при вычислении"""


class NumericalError(NeumannError, RuntimeError):
    """Численный сбой"""


class RootNotBracketedError(NumericalError):
    """Корень не локализован на сетке сканирования"""


class MeshDegeneracyError(NumericalError):
    """Вырожденная сетка: не удалось факторизовать матрицу масс"""


class AssemblyError(NumericalError):
    """Вырожденный треугольник при сборке матриц"""

    def __init__(self, message: str, triangle_index: int):
        super().__init__(message)
        self.triangle_index = triangle_index


class BoundViolationError(NumericalError):
    """Нижняя оценка превысила FEM значение mu_1"""

    def __init__(self, message: str, violations: list):
        super().__init__(message)
        self.violations = violations


EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2


def exit_code_for(error: BaseException) -> int:
    """Код завершения CLI для исключения"""
    if isinstance(error, (RangeError, NumericalError)):
        return EXIT_NUMERICAL
    return EXIT_INPUT
