"""
Веерная триангуляция звёздной относительно anchor области и равномерное
красное измельчение (каждый треугольник делится на 4).
"""

from dataclasses import dataclass

import numpy as np

from loguru import logger

from core.errors import ConfigurationError, MeshDegeneracyError, PreconditionError, StarShapednessError

from geometry.domains import BoundaryModel, boundary_model, domain_anchor, is_polygonal
from geometry.named import resolve

from schema.domain_schema import DomainSpec



MIN_AREA = 1e-14
MAX_REFINEMENT = 8


@dataclass(frozen=True, eq=False)
class Mesh:
    vertices: np.ndarray
    triangles: np.ndarray
    boundary_flags: np.ndarray
    # параметр граничной кривой для граничных вершин, nan для внутренних
    boundary_params: np.ndarray

    @property
    def dof_count(self) -> int:
        return len(self.vertices)

    @property
    def mesh_size(self) -> float:
        """Наибольший диаметр треугольника (длина наибольшего ребра)"""
        v = self.vertices[self.triangles]
        edges = np.stack([v[:, 1] - v[:, 0], v[:, 2] - v[:, 1], v[:, 0] - v[:, 2]], axis=1)
        return float(np.linalg.norm(edges, axis=2).max())

    def translated(self, shift) -> "Mesh":
        return Mesh(self.vertices + np.asarray(shift, dtype=float), self.triangles,
                    self.boundary_flags, self.boundary_params)

    def rotated(self, angle: float) -> "Mesh":
        c, s = np.cos(angle), np.sin(angle)
        rotation = np.array([[c, -s], [s, c]])
        return Mesh(self.vertices @ rotation.T, self.triangles, self.boundary_flags, self.boundary_params)


def triangle_areas(vertices: np.ndarray, triangles: np.ndarray) -> np.ndarray:
    """Знаковые площади; > 0 для ориентации против часовой стрелки"""
    v1, v2, v3 = (vertices[triangles[:, i]] for i in range(3))
    e1, e2 = v2 - v1, v3 - v1
    return 0.5 * (e1[:, 0] * e2[:, 1] - e1[:, 1] * e2[:, 0])


def _midpoint_params(s_a: np.ndarray, s_b: np.ndarray) -> np.ndarray:
    lo, hi = np.minimum(s_a, s_b), np.maximum(s_a, s_b)
    # ребро через точку s = 0: соседние отсчёты разделены меньше чем половиной периметра
    wrap = hi - lo > 0.5
    return np.mod(np.where(wrap, 0.5 * (lo + hi + 1.0), 0.5 * (lo + hi)), 1.0)


def fan_mesh(anchor, boundary: np.ndarray, params: np.ndarray) -> Mesh:
    anchor = np.asarray(anchor, dtype=float)
    m = len(boundary)
    vertices = np.vstack([anchor[None, :], boundary])
    ring = np.arange(1, m + 1)
    triangles = np.column_stack([np.zeros(m, dtype=np.int64), ring, np.roll(ring, -1)])

    areas = triangle_areas(vertices, triangles)
    bad = np.flatnonzero(areas <= MIN_AREA)
    if bad.size:
        index = int(bad[0])
        raise StarShapednessError(
            f"Domain is not star-shaped with respect to {anchor.tolist()}: "
            f"fan triangle over boundary samples {index}-{(index + 1) % m} has area {areas[index]:.3e}",
            boundary_index=index,
        )

    flags = np.concatenate([[False], np.ones(m, dtype=bool)])
    boundary_params = np.concatenate([[np.nan], np.asarray(params, dtype=float)])
    return Mesh(vertices, triangles, flags, boundary_params)


def refine(mesh: Mesh, boundary: BoundaryModel | None = None) -> Mesh:
    """Красное измельчение; при заданной кривой новые граничные середины проецируются на неё"""
    tri = mesh.triangles
    n_tri = len(tri)
    edges = np.sort(np.vstack([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]]), axis=1)
    unique, inverse, counts = np.unique(edges, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)

    n_old = mesh.dof_count
    midpoints = 0.5 * (mesh.vertices[unique[:, 0]] + mesh.vertices[unique[:, 1]])
    on_boundary = counts == 1

    mid_params = np.full(len(unique), np.nan)
    ends = unique[on_boundary]
    mid_params[on_boundary] = _midpoint_params(mesh.boundary_params[ends[:, 0]], mesh.boundary_params[ends[:, 1]])
    if boundary is not None and on_boundary.any():
        midpoints[on_boundary] = boundary.curve(mid_params[on_boundary])

    m01 = n_old + inverse[:n_tri]
    m12 = n_old + inverse[n_tri:2 * n_tri]
    m20 = n_old + inverse[2 * n_tri:]
    a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
    triangles = np.vstack([
        np.column_stack([a, m01, m20]),
        np.column_stack([m01, b, m12]),
        np.column_stack([m20, m12, c]),
        np.column_stack([m01, m12, m20]),
    ])

    vertices = np.vstack([mesh.vertices, midpoints])
    areas = triangle_areas(vertices, triangles)
    if areas.min() <= MIN_AREA:
        index = int(np.argmin(areas))
        raise MeshDegeneracyError(f"Refinement produced triangle {index} with area {areas[index]:.3e}")

    return Mesh(
        vertices=vertices,
        triangles=triangles,
        boundary_flags=np.concatenate([mesh.boundary_flags, on_boundary]),
        boundary_params=np.concatenate([mesh.boundary_params, mid_params]),
    )


def triangulate(spec: DomainSpec, anchor=None, refinement: int = 0, samples: int | None = None,
                project_boundary: bool = True) -> Mesh:
    """Веер из anchor по отсчётам границы, затем refinement равномерных измельчений"""
    spec = resolve(spec)
    if spec.dim != 2:
        raise ConfigurationError(f"Triangulation needs a planar domain, got dim={spec.dim}")
    if not 0 <= refinement <= MAX_REFINEMENT:
        raise PreconditionError(f"refinement must lie in [0, {MAX_REFINEMENT}], got {refinement}")

    model = boundary_model(spec, samples)
    anchor = domain_anchor(spec) if anchor is None else np.asarray(anchor, dtype=float)
    mesh = fan_mesh(anchor, model.points(), model.params)

    projection = model if project_boundary and not is_polygonal(spec) else None
    for _ in range(refinement):
        mesh = refine(mesh, projection)

    logger.debug(
        f"triangulate: {spec.label} refinement={refinement}: "
        f"{mesh.dof_count} vertices, {len(mesh.triangles)} triangles, h={mesh.mesh_size:.4g}"
    )
    return mesh


def mirror_extension(mesh: Mesh, values) -> tuple[Mesh, np.ndarray]:
    """Отражение сетки полуобласти через y = 0 и чётное продолжение узловых значений"""
    values = np.asarray(values, dtype=float)
    if len(values) != mesh.dof_count:
        raise PreconditionError(f"Expected {mesh.dof_count} nodal values, got {len(values)}")

    y = mesh.vertices[:, 1]
    on_axis = np.abs(y) <= 1e-12
    if np.any(y > 1e-12) and np.any(y < -1e-12):
        raise PreconditionError("Mesh must lie on one side of the line y = 0")

    mirror_of = np.arange(mesh.dof_count)
    off_axis = np.flatnonzero(~on_axis)
    mirror_of[off_axis] = mesh.dof_count + np.arange(len(off_axis))

    reflected = mesh.vertices[off_axis] * np.array([1.0, -1.0])
    vertices = np.vstack([mesh.vertices, reflected])
    # отражение меняет ориентацию
    mirrored = mirror_of[mesh.triangles][:, [0, 2, 1]]
    triangles = np.vstack([mesh.triangles, mirrored])

    flags = np.concatenate([mesh.boundary_flags & ~on_axis, mesh.boundary_flags[off_axis]])
    params = np.full(len(vertices), np.nan)
    extended = Mesh(vertices, triangles, flags, params)
    return extended, np.concatenate([values, values[off_axis]])
