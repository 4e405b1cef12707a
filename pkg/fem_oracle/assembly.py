"""
Сборка матриц жёсткости и масс для P1 элементов.

Локальная жёсткость через котангенсы: a_ij = (e_i . e_j) / (4 |T|), e_i - ребро напротив вершины i,
диагональ из нулевых сумм строк. Масса согласованная (не диагонализованная): |T|/12 * [[2,1,1],[1,2,1],[1,1,2]].
"""

import numpy as np

from scipy import sparse

from core.errors import AssemblyError, DegenerateFunctionError, PreconditionError

from fem_oracle.mesh import MIN_AREA, Mesh, triangle_areas



def assemble(mesh: Mesh) -> tuple[sparse.csr_matrix, sparse.csr_matrix]:
    """(stiffness, mass) размера dof_count x dof_count"""
    t1, t2, t3 = mesh.triangles[:, 0], mesh.triangles[:, 1], mesh.triangles[:, 2]
    v1, v2, v3 = mesh.vertices[t1], mesh.vertices[t2], mesh.vertices[t3]

    area = triangle_areas(mesh.vertices, mesh.triangles)
    degenerate = np.flatnonzero(area <= MIN_AREA)
    if degenerate.size:
        index = int(degenerate[0])
        raise AssemblyError(f"Triangle {index} is degenerate (area {area[index]:.3e})", triangle_index=index)

    v2mv1 = v2 - v1
    v3mv2 = v3 - v2
    v1mv3 = v1 - v3
    vol = 4.0 * area

    a12 = np.sum(v3mv2 * v1mv3, axis=1) / vol
    a23 = np.sum(v1mv3 * v2mv1, axis=1) / vol
    a31 = np.sum(v2mv1 * v3mv2, axis=1) / vol
    a11 = -a12 - a31
    a22 = -a12 - a23
    a33 = -a31 - a23

    i = np.column_stack((t1, t2, t2, t3, t3, t1, t1, t2, t3)).reshape(-1)
    j = np.column_stack((t2, t1, t3, t2, t1, t3, t1, t2, t3)).reshape(-1)
    shape = (mesh.dof_count, mesh.dof_count)

    local_a = np.column_stack((a12, a12, a23, a23, a31, a31, a11, a22, a33)).reshape(-1)
    stiffness = sparse.coo_matrix((local_a, (i, j)), shape=shape).tocsr()

    b_ii = area / 6.0
    b_ij = area / 12.0
    local_b = np.column_stack((b_ij, b_ij, b_ij, b_ij, b_ij, b_ij, b_ii, b_ii, b_ii)).reshape(-1)
    mass = sparse.coo_matrix((local_b, (i, j)), shape=shape).tocsr()

    return stiffness, mass


def _nodal(mesh: Mesh, values) -> np.ndarray:
    u = np.asarray(values, dtype=float)
    if u.shape != (mesh.dof_count,):
        raise PreconditionError(f"Expected {mesh.dof_count} nodal values, got shape {u.shape}")
    if not np.all(np.isfinite(u)):
        raise PreconditionError("Nodal values must be finite")
    return u


def dirichlet_energy(mesh: Mesh, values) -> float:
    """Интеграл |grad u|^2 для кусочно-линейной u"""
    u = _nodal(mesh, values)
    stiffness, _ = assemble(mesh)
    return float(u @ (stiffness @ u))


def rayleigh_quotient(mesh: Mesh, values, remove_mean: bool = False) -> float:
    """(u^T A u) / (u^T B u); remove_mean вычитает среднее по области"""
    u = _nodal(mesh, values)
    stiffness, mass = assemble(mesh)
    if remove_mean:
        ones = np.ones_like(u)
        u = u - float(ones @ (mass @ u)) / float(ones @ (mass @ ones))

    denominator = float(u @ (mass @ u))
    if denominator <= 1e-300:
        raise DegenerateFunctionError("Rayleigh quotient denominator vanishes (zero function)")
    return float(u @ (stiffness @ u)) / denominator
