"""
Обобщённая симметричная задача A u = lambda B u.

Малые задачи решаются плотно (scipy.linalg.eigh), большие - методом сдвига и обращения
(eigsh + LU разложение A - sigma B); постоянная мода даёт lambda_0 = 0.
"""

import numpy as np

from loguru import logger

from scipy import linalg, sparse
from scipy.sparse.linalg import LinearOperator, eigsh, splu

from core.config import get_max_dofs
from core.errors import MeshDegeneracyError, PreconditionError

from fem_oracle.assembly import assemble
from fem_oracle.mesh import Mesh

from schema.fem_schema import SpectrumResult



DENSE_LIMIT = 400
SHIFT = -0.01
MAX_EIGS = 10


def _dense_eigenpairs(stiffness, mass, k: int) -> tuple[np.ndarray, np.ndarray]:
    try:
        values, vectors = linalg.eigh(stiffness.toarray(), mass.toarray(), subset_by_index=[0, k - 1])
    except linalg.LinAlgError as e:
        raise MeshDegeneracyError(f"Mass matrix factorization failed: {e}") from e
    return values, vectors


def _shift_invert_eigenpairs(stiffness, mass, k: int) -> tuple[np.ndarray, np.ndarray]:
    try:
        lu = splu(sparse.csc_matrix(stiffness - SHIFT * mass))
    except RuntimeError as e:
        raise MeshDegeneracyError(f"Shifted operator factorization failed: {e}") from e

    op_inv = LinearOperator(matvec=lu.solve, shape=stiffness.shape, dtype=stiffness.dtype)
    # стартовый вектор фиксирован для воспроизводимости
    v0 = np.random.default_rng(0).standard_normal(stiffness.shape[0])
    values, vectors = eigsh(stiffness, k, mass, sigma=SHIFT, which="LM", OPinv=op_inv, v0=v0)
    order = np.argsort(values)
    return values[order], vectors[:, order]


def neumann_eigenpairs(mesh: Mesh, k: int = 6) -> tuple[np.ndarray, np.ndarray]:
    if not 2 <= k <= MAX_EIGS:
        raise PreconditionError(f"k must lie in [2, {MAX_EIGS}], got {k}")
    dofs = mesh.dof_count
    if dofs > get_max_dofs():
        raise PreconditionError(f"Mesh has {dofs} unknowns, desk-scale limit is {get_max_dofs()}")
    if k >= dofs:
        raise PreconditionError(f"k={k} must be smaller than the number of unknowns {dofs}")

    stiffness, mass = assemble(mesh)
    if dofs <= DENSE_LIMIT:
        values, vectors = _dense_eigenpairs(stiffness, mass, k)
    else:
        values, vectors = _shift_invert_eigenpairs(stiffness, mass, k)

    logger.debug(f"neumann_eigenpairs: {dofs} unknowns, lambda_0={values[0]:.3e}, lambda_1={values[1]:.8g}")
    return values, vectors


def neumann_eigenvalues(mesh: Mesh, k: int = 6) -> SpectrumResult:
    """k наименьших собственных значений; eigenvalues[1] - дискретное mu_1"""
    values, _ = neumann_eigenpairs(mesh, k)
    return SpectrumResult(
        eigenvalues=np.maximum.accumulate(values).tolist(),
        mesh_size=mesh.mesh_size,
        dof_count=mesh.dof_count,
    )
