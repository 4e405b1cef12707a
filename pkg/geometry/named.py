"""
Реестр именованных областей: метаданные, которые в JSON задавать не нужно.

bowtie   - образ квадрата при кусочно-аффинном отображении, 1/2 - |x| < y < 3/2 - |x|
half_disc - нижний полукруг радиуса 1, норма продолжения отражением sqrt(2)
unit_disc - единичный круг, конформный случай K = 1
tan_disc - образ единичного круга при z -> tan z, 1/2-звёздная область
unit_square - единичный квадрат
"""

import math

from dataclasses import dataclass

from core.errors import ConfigurationError

from schema.domain_schema import DomainSpec



@dataclass(frozen=True)
class NamedExample:
    name: str
    boundary: str
    anchor: tuple[float, float]
    convex: bool
    vertices: tuple[tuple[float, float], ...] | None = None
    symmetry_center: tuple[float, float] | None = None
    qc_coefficient: float | None = None
    star_beta: float | None = None
    extension_norm_sq: float | None = None


BOWTIE_VERTICES = ((-0.5, 0.0), (0.0, 0.5), (0.5, 0.0), (0.5, 1.0), (0.0, 1.5), (-0.5, 1.0))
UNIT_SQUARE_VERTICES = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))

# Коэффициент квазиконформности кусочно-аффинного отображения квадрата на bowtie
BOWTIE_K = (3.0 + math.sqrt(5.0)) / 2.0


REGISTRY: dict[str, NamedExample] = {
    "bowtie": NamedExample(
        name="bowtie",
        boundary="polygon",
        vertices=BOWTIE_VERTICES,
        anchor=(0.0, 1.0),
        # симметрия осевая, центра симметрии нет
        convex=False,
        qc_coefficient=BOWTIE_K,
    ),
    "half_disc": NamedExample(
        name="half_disc",
        boundary="half_disc",
        anchor=(0.0, -0.5),
        convex=True,
        extension_norm_sq=2.0,
    ),
    "unit_disc": NamedExample(
        name="unit_disc",
        boundary="unit_disc",
        anchor=(0.0, 0.0),
        convex=True,
        symmetry_center=(0.0, 0.0),
        qc_coefficient=1.0,
    ),
    "tan_disc": NamedExample(
        name="tan_disc",
        boundary="tan_disc",
        anchor=(0.0, 0.0),
        convex=False,
        symmetry_center=(0.0, 0.0),
        star_beta=0.5,
    ),
    "unit_square": NamedExample(
        name="unit_square",
        boundary="polygon",
        vertices=UNIT_SQUARE_VERTICES,
        anchor=(0.5, 0.5),
        convex=True,
        symmetry_center=(0.5, 0.5),
    ),
}


def get_example(name: str) -> NamedExample:
    try:
        return REGISTRY[name]
    except KeyError:
        raise ConfigurationError(f"Unknown named example {name!r}; valid names: {', '.join(REGISTRY)}") from None


def resolve(spec: DomainSpec) -> DomainSpec:
    """Дополняет именованную область метаданными реестра; поля, заданные явно, не трогаются"""
    if spec.kind != "named":
        return spec

    example = get_example(spec.name)
    defaults = {
        "anchor": list(example.anchor),
        "convex": example.convex,
        "symmetry_center": list(example.symmetry_center) if example.symmetry_center else None,
        "qc_coefficient": example.qc_coefficient,
        "star_beta": example.star_beta,
        "extension_norm_sq": example.extension_norm_sq,
    }
    update = {key: value for key, value in defaults.items()
              if value is not None and getattr(spec, key) is None}
    return spec.model_copy(update=update)


def named_spec(name: str, **fields) -> DomainSpec:
    """DomainSpec именованного примера с метаданными реестра"""
    get_example(name)
    return resolve(DomainSpec(kind="named", name=name, **fields))
