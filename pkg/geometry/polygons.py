"""Планарные многоугольники: площадь, ориентация, простота"""

import numpy as np



def polygon_area(vertices: np.ndarray) -> float:
    """Знаковая площадь (формула шнурования); > 0 для обхода против часовой стрелки"""
    v = np.asarray(vertices, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


def orient_ccw(vertices: np.ndarray) -> np.ndarray:
    v = np.asarray(vertices, dtype=float)
    return v if polygon_area(v) > 0 else v[::-1].copy()


def polygon_centroid(vertices: np.ndarray) -> np.ndarray:
    v = np.asarray(vertices, dtype=float)
    nxt = np.roll(v, -1, axis=0)
    cross = v[:, 0] * nxt[:, 1] - nxt[:, 0] * v[:, 1]
    area = 0.5 * cross.sum()
    return ((v + nxt) * cross[:, None]).sum(axis=0) / (6.0 * area)


def _orientation(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: np.ndarray, b: np.ndarray, p: np.ndarray) -> bool:
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(p1, p2, q1, q2, eps: float = 1e-14) -> bool:
    d1 = _orientation(q1, q2, p1)
    d2 = _orientation(q1, q2, p2)
    d3 = _orientation(p1, p2, q1)
    d4 = _orientation(p1, p2, q2)

    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True

    # Коллинеарные касания
    if abs(d1) <= eps and _on_segment(q1, q2, p1):
        return True
    if abs(d2) <= eps and _on_segment(q1, q2, p2):
        return True
    if abs(d3) <= eps and _on_segment(p1, p2, q1):
        return True
    if abs(d4) <= eps and _on_segment(p1, p2, q2):
        return True
    return False


def is_simple_polygon(vertices) -> bool:
    """Замкнутая ломаная без самопересечений, с ненулевой площадью и без повторных вершин"""
    v = np.asarray(vertices, dtype=float)
    m = len(v)
    if m < 3 or abs(polygon_area(v)) <= 1e-14:
        return False
    if len(np.unique(v, axis=0)) != m:
        return False

    for i in range(m):
        a, b = v[i], v[(i + 1) % m]
        for j in range(i + 1, m):
            # соседние рёбра имеют общую вершину
            if j == i + 1 or (i == 0 and j == m - 1):
                continue
            if segments_intersect(a, b, v[j], v[(j + 1) % m]):
                return False
    return True
