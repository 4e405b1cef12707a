import math

from typing import Literal

from pydantic import BaseModel, Field, field_validator



class AffinePiece(BaseModel):
    """Кусок отображения с матрицей Якоби D (2x2)"""
    jacobian: list[list[float]]
    region_label: str = ""

    @field_validator("jacobian")
    @classmethod
    def check_shape(cls, jacobian):
        if len(jacobian) != 2 or any(len(row) != 2 for row in jacobian):
            raise ValueError("Jacobian must be a 2x2 matrix")
        if not all(math.isfinite(v) for row in jacobian for v in row):
            raise ValueError("Jacobian entries must be finite")
        return jacobian

    @property
    def det(self) -> float:
        (a, b), (c, d) = self.jacobian
        return a * d - b * c


class QcCoefficient(BaseModel):
    """Коэффициент квазиконформности K >= 1"""
    value: float = Field(ge=1, allow_inf_nan=False)
    source: Literal["affine", "piecewise", "star_beta", "spiral_beta", "user"]


class QcSummary(BaseModel):
    """Ответ команды qc: K и поточечные коэффициенты"""
    K: float
    source: str
    pieces: list[float] = []


class QcRequest(BaseModel):
    """Запрос K: список матриц Якоби или beta (и gamma для спирали)"""
    jacobians: list[list[list[float]]] | None = None
    beta: float | None = None
    gamma: float | None = None
