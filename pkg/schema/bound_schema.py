from pydantic import BaseModel, Field, model_validator



class LowerBound(BaseModel):
    """Нижняя оценка mu_1 (единицы длина^-2)"""
    value: float = Field(ge=0, allow_inf_nan=False)
    formula: str
    inputs: dict[str, float | int | str | None] = {}
    # оценка без заявленной гипотезы (выпуклость, центр симметрии) в выборе best не участвует
    eligible: bool = True
    note: str | None = None


class BoundReport(BaseModel):
    domain: str
    n: int
    diameter: float
    mecb_radius: float
    mecb_center: list[float]
    bounds: list[LowerBound]
    best: int
    pw_comparison: bool
    notes: list[str] = []

    @model_validator(mode="after")
    def check_best(self):
        if not self.bounds:
            raise ValueError("BoundReport needs at least one bound")
        if not 0 <= self.best < len(self.bounds):
            raise ValueError(f"best index {self.best} out of range")
        pool = [b.value for b in self.bounds if b.eligible] or [b.value for b in self.bounds]
        if self.bounds[self.best].value != max(pool):
            raise ValueError("best must attain the maximal competing bound")
        return self

    @property
    def best_bound(self) -> LowerBound:
        return self.bounds[self.best]
