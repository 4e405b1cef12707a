from loguru import logger

from core.errors import ConfigurationError

from geometry.domains import sample_domain
from geometry.enclosing import diameter, min_enclosing_ball
from geometry.named import resolve

from qc_maps.affine import piecewise_qc_coefficient
from qc_maps.star import spiral_shaped_K, star_shaped_K

from schema.bound_schema import BoundReport, LowerBound
from schema.domain_schema import DomainSpec
from schema.norm_schema import ExtensionNormEstimate
from schema.qc_schema import AffinePiece, QcCoefficient

from extension_norms.mikhlin import mikhlin_star_norm_sq_bound
from extension_norms.simple import half_ball_reflection_norm, quasidisc_norm, user_norm

from bounds.formulas import (
    corollary_a_bound,
    improvement_condition,
    payne_weinberger_bound,
    star_shaped_bound,
    symmetric_bound,
    theorem_a_bound,
)



NO_SYMMETRY_NOTE = "no declared symmetry centre; listed for reference"
NOT_CONVEX_NOTE = "convexity not verified"

DOMAIN_NOTES = {
    "bowtie": (
        "bowtie: the published estimate ~2/5 uses the symmetric form with d/2 = sqrt(10)/4, "
        "the domain is only axis-symmetric; the MECB radius 5/6 gives the corollary_a value"
    ),
    "tan_disc": (
        "tan_disc: the published figure ~1/5 disagrees with its own factors "
        "4 sin^4(pi/8) (1.84118/3.2)^2 ~ 0.0284; the formula value is reported"
    ),
}


def _with_eligibility(bound: LowerBound, eligible: bool, note: str | None = None) -> LowerBound:
    if eligible:
        return bound
    return bound.model_copy(update={"eligible": False, "note": note})


def _qc_coefficient(spec: DomainSpec) -> QcCoefficient | None:
    if spec.qc_coefficient is not None:
        return QcCoefficient(value=spec.qc_coefficient, source="user")
    if spec.jacobians:
        pieces = [AffinePiece(jacobian=j, region_label=f"piece-{i}") for i, j in enumerate(spec.jacobians)]
        return piecewise_qc_coefficient(pieces)
    return None


def _given_norm(spec: DomainSpec) -> ExtensionNormEstimate | None:
    if spec.extension_norm_sq is None:
        return None
    if spec.kind == "named" and spec.name == "half_disc" and spec.extension_norm_sq == 2.0:
        return half_ball_reflection_norm()
    return user_norm(spec.extension_norm_sq)


def best_index(bounds: list[LowerBound]) -> int:
    """Индекс наибольшей допустимой оценки; если допустимых нет - наибольшей из всех"""
    pool = [i for i, b in enumerate(bounds) if b.eligible] or list(range(len(bounds)))
    return max(pool, key=lambda i: (bounds[i].value, -i))


def best_bound_report(spec: DomainSpec, n: int | None = None, seed: int | None = None,
                      samples: int | None = None) -> BoundReport:
    """Все применимые оценки mu_1 для области, best = argmax"""
    spec = resolve(spec)
    n = n or spec.dim
    # для полушара d и R_omega планарного сечения совпадают с n-мерными;
    # другое n допустимо только при заданной норме продолжения
    if n != spec.dim and (spec.dim != 2 or spec.extension_norm_sq is None):
        raise ConfigurationError(
            f"n={n} does not match domain dimension {spec.dim}; "
            "a different n needs a declared extension_norm_sq on a planar section"
        )

    points = sample_domain(spec, samples)
    d = diameter(points)
    ball = min_enclosing_ball(points, seed=seed)
    R = ball.radius
    symmetric = spec.symmetry_center is not None

    bounds: list[LowerBound] = []
    norms: list[ExtensionNormEstimate] = []
    notes: list[str] = []

    K = _qc_coefficient(spec)
    if K is not None:
        if n == 2:
            norm = quasidisc_norm(K)
            norms.append(norm)
            bounds.append(corollary_a_bound(K, R))
            bounds.append(_with_eligibility(symmetric_bound(norm, d, 2), symmetric, NO_SYMMETRY_NOTE))
        else:
            notes.append(f"K given but n={n}: quasidisc bounds are planar, skipped")

    if spec.star_beta is not None:
        if n == 2:
            if spec.gamma is not None:
                K_star = spiral_shaped_K(spec.star_beta, spec.gamma)
            else:
                K_star = star_shaped_K(spec.star_beta)
            norms.append(quasidisc_norm(K_star))
            bounds.append(corollary_a_bound(K_star, R))
            bounds.append(_with_eligibility(star_shaped_bound(spec.star_beta, d), symmetric, NO_SYMMETRY_NOTE))
        else:
            notes.append(f"beta given but n={n}: star-shaped bounds are planar, skipped")

    given = [_given_norm(spec)]
    if spec.star_data is not None:
        given.append(mikhlin_star_norm_sq_bound(spec.star_data))
    for norm in filter(None, given):
        norms.append(norm)
        bounds.append(theorem_a_bound(norm, R, n))
        bounds.append(_with_eligibility(symmetric_bound(norm, d, n), symmetric, NO_SYMMETRY_NOTE))

    bounds.append(_with_eligibility(payne_weinberger_bound(d), bool(spec.convex), NOT_CONVEX_NOTE))

    if spec.kind == "named" and spec.name in DOMAIN_NOTES:
        notes.append(DOMAIN_NOTES[spec.name])
    if any(norm.source.endswith("[W^1_2]") for norm in norms):
        notes.append("Mikhlin norms are W^1_2 operator norms, used without conversion")

    best = best_index(bounds)
    report = BoundReport(
        domain=spec.label,
        n=n,
        diameter=d,
        mecb_radius=R,
        mecb_center=ball.center,
        bounds=bounds,
        best=best,
        pw_comparison=any(improvement_condition(norm, n) for norm in norms),
        notes=notes,
    )
    logger.debug(
        f"best_bound_report: {report.domain} d={d:.6g} R={R:.6g} "
        f"best {bounds[best].formula}={bounds[best].value:.6g}"
    )
    return report
