import math

from typing import Literal

from pydantic import BaseModel, Field, model_validator



class ExtensionNormEstimate(BaseModel):
    """Оценка квадрата нормы оператора продолжения ||E||^2"""
    value_sq: float = Field(ge=1, allow_inf_nan=False)
    kind: Literal["exact", "upper_bound"]
    source: str

    @property
    def norm(self) -> float:
        return math.sqrt(self.value_sq)


class StarShapeData(BaseModel):
    """Данные звёздной области: M1, M2 - min/max радиальной функции, M3 - sup её градиента"""
    M1: float = Field(gt=0, allow_inf_nan=False)
    M2: float = Field(gt=0, allow_inf_nan=False)
    M3: float = Field(ge=0, allow_inf_nan=False)
    n: int = Field(gt=2)
    R: float = Field(gt=1, allow_inf_nan=False)

    @model_validator(mode="after")
    def check_radii(self):
        if self.M2 < self.M1:
            raise ValueError(f"M2 must be >= M1, got M1={self.M1}, M2={self.M2}")
        return self
