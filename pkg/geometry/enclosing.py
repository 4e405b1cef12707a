"""
Диаметр облака точек и минимальный охватывающий шар (задача о наименьшей окружности).

Шар ищется рандомизированным алгоритмом Велцля с перемещением в начало списка
(move-to-front): глубина рекурсии ограничена размером опорного множества (<= n + 1),
а не числом точек.
"""

import numpy as np

from loguru import logger

from scipy.spatial import ConvexHull
from scipy.spatial.distance import cdist, pdist

from core.config import get_seed
from core.errors import PreconditionError

from schema.domain_schema import MAX_DIM, Ball



CONTAIN_RTOL = 1e-12
CONTAIN_ATOL = 1e-12
BALL_TOL = 1e-9
_HULL_THRESHOLD = 2000
_CHUNK = 2048


def as_point_cloud(points, min_points: int = 1) -> np.ndarray:
    cloud = np.asarray(points, dtype=float)
    if cloud.ndim != 2:
        raise PreconditionError(f"Points must share a common dimension, got array of shape {cloud.shape}")
    if len(cloud) < min_points:
        raise PreconditionError(f"At least {min_points} point(s) required, got {len(cloud)}")
    if not 1 <= cloud.shape[1] <= MAX_DIM:
        raise PreconditionError(f"Dimension must be at most {MAX_DIM}, got {cloud.shape[1]}")
    if not np.all(np.isfinite(cloud)):
        raise PreconditionError("All coordinates must be finite")
    return cloud


def _chunked_diameter(cloud: np.ndarray) -> float:
    best = 0.0
    for start in range(0, len(cloud), _CHUNK):
        block = cdist(cloud[start:start + _CHUNK], cloud[start:])
        best = max(best, float(block.max()))
    return best


def diameter(points) -> float:
    """Наибольшее попарное расстояние d = max |x - y|"""
    cloud = as_point_cloud(points, min_points=2)
    if len(cloud) <= _HULL_THRESHOLD:
        return float(pdist(cloud).max())

    # Максимум попарного расстояния достигается на вершинах выпуклой оболочки
    try:
        hull = ConvexHull(cloud)
        return float(pdist(cloud[hull.vertices]).max())
    except (ValueError, RuntimeError) as e:
        logger.debug(f"diameter: convex hull unavailable ({e}), falling back to full scan")
        return _chunked_diameter(cloud)


def circumsphere(points) -> tuple[np.ndarray, float]:
    """
    Наименьшая сфера через 1..n+1 точек, центр в их аффинной оболочке.
    Возвращает (центр, квадрат радиуса).
    """
    support = np.asarray(points, dtype=float)
    origin = support[0]
    if len(support) == 1:
        return origin.copy(), 0.0

    edges = support[1:] - origin
    # |c - s_0|^2 = |c - s_i|^2, c = s_0 + edges^T lam  =>  (edges edges^T) lam = |edges|^2 / 2
    gram = edges @ edges.T
    rhs = 0.5 * np.einsum("ij,ij->i", edges, edges)
    lam = np.linalg.lstsq(gram, rhs, rcond=None)[0]
    offset = lam @ edges
    return origin + offset, float(offset @ offset)


def _contains(center: np.ndarray, radius_sq: float, point: np.ndarray) -> bool:
    if radius_sq < 0:
        return False
    radius = np.sqrt(radius_sq)
    return float(np.linalg.norm(point - center)) <= radius * (1.0 + CONTAIN_RTOL) + CONTAIN_ATOL


def min_enclosing_ball(points, seed: int | None = None) -> Ball:
    """Единственный наименьший шар, содержащий все точки"""
    cloud = as_point_cloud(points, min_points=1)
    dim = cloud.shape[1]
    seed = get_seed() if seed is None else seed

    order = list(np.random.default_rng(seed).permutation(len(cloud)))

    def move_to_front(end: int, support: list[int]):
        if support:
            center, radius_sq = circumsphere(cloud[support])
        else:
            center, radius_sq = np.zeros(dim), -1.0
        if len(support) == dim + 1:
            return center, radius_sq, support

        best_support = list(support)
        i = 0
        while i < end:
            idx = order[i]
            if not _contains(center, radius_sq, cloud[idx]):
                center, radius_sq, best_support = move_to_front(i, support + [idx])
                order.insert(0, order.pop(i))
            i += 1
        return center, radius_sq, best_support

    center, radius_sq, support = move_to_front(len(cloud), [])
    radius = float(np.sqrt(max(radius_sq, 0.0)))

    farthest = float(np.linalg.norm(cloud - center, axis=1).max())
    if farthest > radius + BALL_TOL:
        logger.warning(f"min_enclosing_ball: enlarging radius {radius} to cover point at {farthest}")
        radius = farthest

    logger.debug(f"min_enclosing_ball: {len(cloud)} points, support {sorted(support)}, radius {radius}")
    return Ball(center=center.tolist(), radius=radius, support=sorted(int(i) for i in support))
