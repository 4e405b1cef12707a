import math

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from geometry.polygons import is_simple_polygon

from schema.norm_schema import StarShapeData



NAMED_EXAMPLES = ("bowtie", "half_disc", "unit_disc", "tan_disc", "unit_square")
SAMPLER_CURVES = ("unit_disc", "tan_disc", "half_disc")

MAX_DIM = 8


class DomainSpec(BaseModel):
    """
    Ограниченная область: многоугольник (облако вершин при dim > 2),
    параметрическая граница с m отсчётами или именованный пример.
    K и beta читаются из JSON по ключам "K" и "beta".
    """
    model_config = ConfigDict(populate_by_name=True, extra="forbid")

    kind: Literal["polygon", "named", "sampler"]
    dim: int = Field(2, ge=2, le=MAX_DIM)
    vertices: list[list[float]] | None = None
    name: str | None = None
    samples: int | None = Field(None, ge=3)
    symmetry_center: list[float] | None = None
    qc_coefficient: float | None = Field(None, alias="K", ge=1, allow_inf_nan=False)
    star_beta: float | None = Field(None, alias="beta", ge=0, lt=1)
    gamma: float | None = Field(None, allow_inf_nan=False)
    anchor: list[float] | None = None
    convex: bool | None = None
    extension_norm_sq: float | None = Field(None, ge=1, allow_inf_nan=False)
    jacobians: list[list[list[float]]] | None = None
    star_data: StarShapeData | None = None

    @field_validator("vertices")
    @classmethod
    def drop_closing_vertex(cls, vertices):
        if vertices and len(vertices) > 1 and vertices[0] == vertices[-1]:
            vertices = vertices[:-1]
        return vertices

    @model_validator(mode="after")
    def check_consistency(self):
        if self.kind == "polygon":
            self._check_polygon()
        elif self.kind == "named":
            if self.name not in NAMED_EXAMPLES:
                raise ValueError(f"Unknown named example {self.name!r}; valid names: {', '.join(NAMED_EXAMPLES)}")
            if self.dim != 2:
                raise ValueError("Named examples are planar (dim=2)")
        else:
            if self.name not in SAMPLER_CURVES:
                raise ValueError(f"Unknown boundary sampler {self.name!r}; valid samplers: {', '.join(SAMPLER_CURVES)}")
            if self.dim != 2:
                raise ValueError("Boundary samplers are planar (dim=2)")

        for field, point in (("symmetry_center", self.symmetry_center), ("anchor", self.anchor)):
            if point is not None:
                if len(point) != self.dim:
                    raise ValueError(f"{field} must have {self.dim} coordinates, got {len(point)}")
                if not all(math.isfinite(c) for c in point):
                    raise ValueError(f"{field} coordinates must be finite")

        if self.jacobians is not None:
            if not self.jacobians:
                raise ValueError("jacobians must be a non-empty list of 2x2 matrices")
            for matrix in self.jacobians:
                if len(matrix) != 2 or any(len(row) != 2 for row in matrix):
                    raise ValueError("Each jacobian must be a 2x2 matrix")

        if self.star_data is not None and self.star_data.n != self.dim:
            raise ValueError(f"star_data.n={self.star_data.n} does not match dim={self.dim}")
        return self

    def _check_polygon(self):
        if not self.vertices:
            raise ValueError("Polygon domain requires vertices")
        for vertex in self.vertices:
            if len(vertex) != self.dim:
                raise ValueError(f"Vertex {vertex} does not have dim={self.dim} coordinates")
            if not all(math.isfinite(c) for c in vertex):
                raise ValueError(f"Vertex {vertex} has non-finite coordinates")
        if self.dim == 2 and not is_simple_polygon(self.vertices):
            raise ValueError("Polygon must be simple (non-self-intersecting) with at least 3 distinct vertices")

    @property
    def label(self) -> str:
        return self.name or f"{self.kind}[{len(self.vertices or [])}]"


class Ball(BaseModel):
    center: list[float]
    radius: float = Field(ge=0, allow_inf_nan=False)
    support: list[int] = []


class GeometrySummary(BaseModel):
    """Ответ команды mecb"""
    domain: str
    center: list[float]
    radius: float
    diameter: float
    point_count: int
