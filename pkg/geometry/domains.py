"""
Дискретизация областей: параметрическая граница s in [0, 1) -> R^2 и облако точек.

Отсчёты детерминированы; вершины многоугольника всегда входят в облако,
углы полукруга (+-1, 0) - всегда отсчёты границы.
"""

import math

from dataclasses import dataclass
from typing import Callable

import numpy as np

from loguru import logger

from core.errors import ConfigurationError, PreconditionError

from geometry.named import get_example, resolve
from geometry.polygons import orient_ccw, polygon_centroid

from schema.domain_schema import DomainSpec



DEFAULT_SAMPLES = 256

Curve = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class BoundaryModel:
    """Замкнутая кривая против часовой стрелки и возрастающие параметры её отсчётов"""
    curve: Curve
    params: np.ndarray

    def points(self) -> np.ndarray:
        return self.curve(self.params)


def polygon_curve(vertices: np.ndarray) -> tuple[Curve, np.ndarray]:
    """Кусочно-линейная кривая через вершины; параметр - доля длины периметра"""
    v = np.asarray(vertices, dtype=float)
    closed = np.vstack([v, v[:1]])
    lengths = np.linalg.norm(np.diff(closed, axis=0), axis=1)
    knots = np.concatenate([[0.0], np.cumsum(lengths)]) / lengths.sum()

    def curve(s: np.ndarray) -> np.ndarray:
        s = np.mod(np.asarray(s, dtype=float), 1.0)
        edge = np.clip(np.searchsorted(knots, s, side="right") - 1, 0, len(v) - 1)
        t = (s - knots[edge]) / (knots[edge + 1] - knots[edge])
        return closed[edge] + t[:, None] * (closed[edge + 1] - closed[edge])

    return curve, knots[:-1].copy()


def unit_disc_curve(s: np.ndarray) -> np.ndarray:
    theta = 2.0 * np.pi * np.asarray(s, dtype=float)
    return np.column_stack([np.cos(theta), np.sin(theta)])


def tan_disc_curve(s: np.ndarray) -> np.ndarray:
    w = np.tan(np.exp(2j * np.pi * np.asarray(s, dtype=float)))
    return np.column_stack([w.real, w.imag])


# Доля параметра на дуге полукруга: длины дуги и диаметра pi и 2
HALF_DISC_ARC = math.pi / (math.pi + 2.0)


def half_disc_curve(s: np.ndarray) -> np.ndarray:
    s = np.mod(np.asarray(s, dtype=float), 1.0)
    on_arc = s < HALF_DISC_ARC
    theta = np.pi * (1.0 + s / HALF_DISC_ARC)
    t = (s - HALF_DISC_ARC) / (1.0 - HALF_DISC_ARC)

    x = np.where(on_arc, np.cos(theta), 1.0 - 2.0 * t)
    y = np.where(on_arc, np.sin(theta), 0.0)

    # углы (-1, 0) и (1, 0) точно на диаметре
    corner = on_arc & ((s == 0.0) | (np.abs(y) < 1e-15))
    y = np.where(corner, 0.0, np.minimum(y, 0.0))
    x = np.where(corner, np.sign(x), x)
    return np.column_stack([x, y])


def _half_disc_params(m: int) -> np.ndarray:
    m_arc = min(max(int(round(m * HALF_DISC_ARC)), 2), m - 1)
    arc = HALF_DISC_ARC * np.arange(m_arc) / m_arc
    line = HALF_DISC_ARC + (1.0 - HALF_DISC_ARC) * np.arange(m - m_arc) / (m - m_arc)
    return np.concatenate([arc, line])


CURVES: dict[str, Curve] = {
    "unit_disc": unit_disc_curve,
    "tan_disc": tan_disc_curve,
    "half_disc": half_disc_curve,
}


def _sampler_model(name: str, m: int) -> BoundaryModel:
    if m < 3:
        raise PreconditionError(f"Boundary sampler needs m >= 3 samples, got {m}")
    if name not in CURVES:
        raise ConfigurationError(f"Unknown boundary sampler {name!r}")
    params = _half_disc_params(m) if name == "half_disc" else np.arange(m) / m
    return BoundaryModel(curve=CURVES[name], params=params)


def _polygon_vertices(spec: DomainSpec) -> np.ndarray:
    if spec.kind == "polygon":
        return np.asarray(spec.vertices, dtype=float)
    example = get_example(spec.name)
    if example.vertices is None:
        raise ConfigurationError(f"Named example {spec.name!r} has no polygon vertices")
    return np.asarray(example.vertices, dtype=float)


def is_polygonal(spec: DomainSpec) -> bool:
    return spec.kind == "polygon" or (spec.kind == "named" and get_example(spec.name).boundary == "polygon")


def boundary_model(spec: DomainSpec, m: int | None = None) -> BoundaryModel:
    """Параметрическая граница планарной области"""
    if spec.dim != 2:
        raise ConfigurationError(f"Boundary model needs a planar domain, got dim={spec.dim}")

    if is_polygonal(spec):
        curve, params = polygon_curve(orient_ccw(_polygon_vertices(spec)))
        return BoundaryModel(curve=curve, params=params)

    m = m or spec.samples or DEFAULT_SAMPLES
    name = spec.name if spec.kind == "sampler" else get_example(spec.name).boundary
    return _sampler_model(name, m)


def sample_domain(spec: DomainSpec, m: int | None = None) -> np.ndarray:
    """Облако точек (k, dim): вершины многоугольника или m отсчётов границы"""
    if spec.kind == "polygon" and spec.dim != 2:
        return np.asarray(spec.vertices, dtype=float)
    if is_polygonal(spec):
        return _polygon_vertices(spec)

    model = boundary_model(spec, m)
    points = model.points()
    logger.debug(f"sample_domain: {spec.label} sampled at {len(points)} points")
    return points


def domain_anchor(spec: DomainSpec) -> np.ndarray:
    """Точка, относительно которой область звёздна: явная, из реестра или центроид"""
    spec = resolve(spec)
    if spec.anchor is not None:
        return np.asarray(spec.anchor, dtype=float)
    if spec.kind == "sampler":
        return np.array([0.0, -0.5]) if spec.name == "half_disc" else np.zeros(2)
    return polygon_centroid(_polygon_vertices(spec))
