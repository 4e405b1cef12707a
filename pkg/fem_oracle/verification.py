"""
Проверка оценок на сетках: конформный Галёркин даёт mu_1 <= mu_1,h,
поэтому любая верная нижняя оценка должна лежать ниже mu_1,h.
"""

from loguru import logger

from core.errors import BoundViolationError, PreconditionError

from bounds.formulas import quasi_monotonicity_upper
from bounds.report import best_bound_report

from fem_oracle.mesh import triangulate
from fem_oracle.spectrum import neumann_eigenvalues

from geometry.named import resolve

from schema.domain_schema import DomainSpec
from schema.fem_schema import BoundCheck, ConvergenceRow, QuasiMonotonicityRecord, VerificationRecord
from schema.norm_schema import ExtensionNormEstimate



def fem_mu1(spec: DomainSpec, refinement: int, samples: int | None = None,
            project_boundary: bool = True) -> tuple[float, float, int]:
    """(mu_1,h, h, число неизвестных)"""
    mesh = triangulate(spec, refinement=refinement, samples=samples, project_boundary=project_boundary)
    spectrum = neumann_eigenvalues(mesh, k=3)
    return spectrum.mu1, spectrum.mesh_size, spectrum.dof_count


def verify_bound(spec: DomainSpec, refinement: int = 3, samples: int | None = None,
                 seed: int | None = None) -> VerificationRecord:
    """Сравнивает все оценки best_bound_report с mu_1,h; нарушение допустимой оценки - ошибка"""
    spec = resolve(spec)
    report = best_bound_report(spec, seed=seed, samples=samples)
    mu1, h, dofs = fem_mu1(spec, refinement, samples)

    checks = [
        BoundCheck(
            formula=bound.formula,
            value=bound.value,
            margin=mu1 - bound.value,
            satisfied=mu1 - bound.value > 0,
            eligible=bound.eligible,
        )
        for bound in report.bounds
    ]
    violations = [c for c in checks if c.eligible and not c.satisfied]
    for check in checks:
        if not check.satisfied and not check.eligible:
            logger.warning(
                f"verify_bound: reference bound {check.formula}={check.value:.6g} "
                f"exceeds fem mu1={mu1:.6g} on {spec.label} (hypothesis not declared)"
            )

    if violations:
        names = ", ".join(f"{c.formula}={c.value:.6g}" for c in violations)
        raise BoundViolationError(f"Lower bounds exceed fem mu1={mu1:.6g} on {spec.label}: {names}",
                                  violations=violations)

    return VerificationRecord(
        domain=spec.label,
        refinement=refinement,
        fem_mu1=mu1,
        mesh_size=h,
        dof_count=dofs,
        checks=checks,
        satisfied=all(c.satisfied for c in checks if c.eligible),
    )


def convergence_study(spec: DomainSpec, levels, samples: int | None = None,
                      project_boundary: bool = True) -> list[ConvergenceRow]:
    """Таблица (уровень, h, неизвестные, mu_1,h) с экстраполяцией Ричардсона (4 mu_h - mu_2h) / 3"""
    levels = sorted(set(int(level) for level in levels))
    if not levels:
        raise PreconditionError("convergence_study needs at least one refinement level")

    rows: list[ConvergenceRow] = []
    for level in levels:
        mu1, h, dofs = fem_mu1(spec, level, samples, project_boundary=project_boundary)
        richardson = None
        if rows and rows[-1].level == level - 1:
            richardson = (4.0 * mu1 - rows[-1].mu1) / 3.0
        rows.append(ConvergenceRow(level=level, mesh_size=h, dof_count=dofs, mu1=mu1, richardson=richardson))
    return rows


def quasi_monotonicity_check(outer: DomainSpec, inner: DomainSpec, norm: ExtensionNormEstimate,
                             refinement: int = 3, samples: int | None = None) -> QuasiMonotonicityRecord:
    """mu_1,h(outer) <= ||E_inner||^2 mu_1,h(inner)"""
    outer_mu1, _, _ = fem_mu1(outer, refinement, samples)
    inner_mu1, _, _ = fem_mu1(inner, refinement, samples)
    upper = quasi_monotonicity_upper(inner_mu1, norm)
    margin = upper - outer_mu1
    return QuasiMonotonicityRecord(
        outer=resolve(outer).label,
        inner=resolve(inner).label,
        outer_mu1=outer_mu1,
        inner_mu1=inner_mu1,
        norm_sq=norm.value_sq,
        upper=upper,
        margin=margin,
        relative_margin=margin / upper if upper > 0 else 0.0,
        satisfied=margin >= 0,
    )
