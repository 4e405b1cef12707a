import math

from typing import Annotated, Callable

from pydantic import BaseModel, Field



# Порядок функции Бесселя: конечный, неотрицательный
BesselOrder = Annotated[float, Field(ge=0, le=40, allow_inf_nan=False)]


class RootBracket(BaseModel):
    """Отрезок [lo, hi] со сменой знака функции"""
    lo: float = Field(allow_inf_nan=False)
    hi: float = Field(allow_inf_nan=False)
    f_lo: float = Field(allow_inf_nan=False)
    f_hi: float = Field(allow_inf_nan=False)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def has_sign_change(self) -> bool:
        return self.hi > self.lo and self.f_lo * self.f_hi < 0

    @classmethod
    def from_function(cls, f: Callable[[float], float], lo: float, hi: float) -> "RootBracket":
        return cls(lo=lo, hi=hi, f_lo=f(lo), f_hi=f(hi))


def is_finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)
