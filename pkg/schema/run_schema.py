from typing import Literal

from pydantic import BaseModel, Field, model_validator

from core.config import get_seed



Command = Literal["pzero", "mikhlin", "mikhlin-star", "qc", "mecb", "bound", "fem", "verify", "reproduce"]

REPRODUCIBLE = ("bowtie", "half_ball", "tan_star", "mikhlin_table", "pzero_table")

# обязательные флаги по командам
REQUIRED_FLAGS: dict[str, tuple[str, ...]] = {
    "pzero": ("n",),
    "mikhlin": ("n", "R"),
    "mikhlin-star": ("n", "R", "m1", "m2", "m3"),
    "mecb": ("domain_path",),
    "bound": ("domain_path",),
    "fem": ("domain_path",),
    "verify": ("domain_path",),
    "reproduce": ("example",),
}


class RunConfig(BaseModel):
    """Одна команда CLI с проверенными флагами"""
    command: Command
    domain_path: str | None = None
    jacobians_path: str | None = None
    example: str | None = None
    n: int | None = None
    R: float | None = None
    m1: float | None = None
    m2: float | None = None
    m3: float | None = None
    beta: float | None = None
    gamma: float | None = None
    refine: int = Field(3, ge=0, le=8)
    eigs: int = Field(3, ge=2, le=10)
    table: bool = False
    output: Literal["json", "csv"] = "json"
    seed: int = Field(default_factory=get_seed)

    @model_validator(mode="after")
    def check_flags(self):
        missing = [flag for flag in REQUIRED_FLAGS.get(self.command, ()) if getattr(self, flag) is None]
        if missing:
            raise ValueError(f"Command {self.command!r} requires: {', '.join('--' + m for m in missing)}")
        if self.command == "qc" and self.jacobians_path is None and self.beta is None:
            raise ValueError("Command 'qc' requires --jacobians or --beta")
        if self.command == "reproduce" and self.example not in REPRODUCIBLE:
            raise ValueError(f"Unknown example {self.example!r}; valid names: {', '.join(REPRODUCIBLE)}")
        return self


class PZeroResult(BaseModel):
    n: int
    p: float


class Claim(BaseModel):
    """Опубликованное значение против вычисленного"""
    name: str
    published_value: float
    computed: float
    tolerance: float
    match: bool

    @classmethod
    def compare(cls, name: str, published_value: float, computed: float, tolerance: float) -> "Claim":
        return cls(name=name, published_value=published_value, computed=computed, tolerance=tolerance,
                   match=abs(computed - published_value) <= tolerance)


class ReproductionReport(BaseModel):
    example: str
    inputs: dict = {}
    intermediates: dict = {}
    claims: list[Claim] = []
    notes: list[str] = []

    @property
    def discrepancies(self) -> list[Claim]:
        return [claim for claim in self.claims if not claim.match]
