from pydantic import BaseModel, Field, model_validator



class SpectrumResult(BaseModel):
    """Наименьшие собственные значения задачи Неймана (длина^-2)"""
    eigenvalues: list[float]
    mesh_size: float = Field(gt=0)
    dof_count: int = Field(gt=0)

    @model_validator(mode="after")
    def check_order(self):
        if len(self.eigenvalues) < 2:
            raise ValueError("SpectrumResult needs at least two eigenvalues")
        if any(b < a for a, b in zip(self.eigenvalues, self.eigenvalues[1:])):
            raise ValueError("Eigenvalues must be nondecreasing")
        return self

    @property
    def mu1(self) -> float:
        return self.eigenvalues[1]


class BoundCheck(BaseModel):
    formula: str
    value: float
    margin: float
    satisfied: bool
    eligible: bool = True


class VerificationRecord(BaseModel):
    domain: str
    refinement: int
    fem_mu1: float
    mesh_size: float
    dof_count: int
    checks: list[BoundCheck]
    satisfied: bool


class ConvergenceRow(BaseModel):
    level: int
    mesh_size: float
    dof_count: int
    mu1: float
    # экстраполяция Ричардсона второго порядка, справочно
    richardson: float | None = None


class QuasiMonotonicityRecord(BaseModel):
    """mu_1(outer) <= ||E||^2 mu_1(inner) на сетках"""
    outer: str
    inner: str
    outer_mu1: float
    inner_mu1: float
    norm_sq: float
    upper: float
    margin: float
    relative_margin: float
    satisfied: bool
