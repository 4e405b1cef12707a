import json
import time

from pathlib import Path

from loguru import logger

from bounds.report import best_bound_report

from services.reproduce import reproduce

from core.errors import ConfigurationError, NeumannError

from extension_norms.mikhlin import mikhlin_ball_norm_sq, mikhlin_star_norm_sq_bound

from fem_oracle.mesh import triangulate
from fem_oracle.spectrum import neumann_eigenvalues
from fem_oracle.verification import convergence_study, verify_bound

from geometry.domains import sample_domain
from geometry.enclosing import diameter, min_enclosing_ball
from geometry.named import resolve

from qc_maps.affine import affine_qc_coefficient, piecewise_qc_coefficient
from qc_maps.star import spiral_shaped_K, star_shaped_K

from schema.bound_schema import BoundReport
from schema.domain_schema import DomainSpec, GeometrySummary
from schema.fem_schema import ConvergenceRow, SpectrumResult, VerificationRecord
from schema.norm_schema import ExtensionNormEstimate, StarShapeData
from schema.qc_schema import AffinePiece, QcSummary
from schema.run_schema import PZeroResult, ReproductionReport

from special_functions.roots import p_zero




def load_domain(path: str) -> DomainSpec:
    """Чтение DomainSpec из JSON файла"""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigurationError(f"Cannot read domain file {path}: {e}") from e
    return DomainSpec.model_validate_json(raw)


def load_jacobians(path: str) -> list[AffinePiece]:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read jacobians file {path}: {e}") from e
    if not isinstance(raw, list):
        raise ConfigurationError("Jacobians file must contain a list of 2x2 matrices")
    return [AffinePiece(jacobian=matrix, region_label=f"piece-{i}") for i, matrix in enumerate(raw)]


class SpectralService:
    """Операции над областями и оценками, общие для CLI и HTTP"""

    def __init__(self, observer=None):
        # observer(name, seconds, dofs) получает длительность FEM решения
        self.observer = observer


    def p_zero(self, n: int) -> PZeroResult:
        """Первый ноль p_{n/2}"""
        logger.info(f"SpectralService.p_zero: n={n}")
        return PZeroResult(n=n, p=p_zero(n))


    def mikhlin(self, n: int, R: float) -> ExtensionNormEstimate:
        logger.info(f"SpectralService.mikhlin: n={n}, R={R}")
        return mikhlin_ball_norm_sq(n, R)


    def mikhlin_star(self, data: StarShapeData) -> ExtensionNormEstimate:
        logger.info(f"SpectralService.mikhlin_star: {data.model_dump()}")
        return mikhlin_star_norm_sq_bound(data)


    def qc(self, pieces: list[AffinePiece] | None = None, beta: float | None = None,
           gamma: float | None = None) -> QcSummary:
        """K кусочно-аффинного отображения или звёздной/спиральной области"""
        logger.info("SpectralService.qc: вычисление коэффициента квазиконформности")
        if pieces:
            K = piecewise_qc_coefficient(pieces)
            per_piece = [affine_qc_coefficient(piece).value for piece in pieces]
            return QcSummary(K=K.value, source=K.source, pieces=per_piece)
        if beta is None:
            raise ConfigurationError("qc needs jacobians or beta")
        K = spiral_shaped_K(beta, gamma) if gamma is not None else star_shaped_K(beta)
        return QcSummary(K=K.value, source=K.source)


    def mecb(self, spec: DomainSpec, seed: int | None = None) -> GeometrySummary:
        """Центр и радиус минимального охватывающего шара, диаметр"""
        spec = resolve(spec)
        logger.info(f"SpectralService.mecb: область {spec.label}")
        points = sample_domain(spec)
        ball = min_enclosing_ball(points, seed=seed)
        summary = GeometrySummary(
            domain=spec.label,
            center=ball.center,
            radius=ball.radius,
            diameter=diameter(points),
            point_count=len(points),
        )
        logger.info(f"SpectralService.mecb: R={summary.radius:.6g}, d={summary.diameter:.6g}")
        return summary


    def bound(self, spec: DomainSpec, n: int | None = None, seed: int | None = None) -> BoundReport:
        logger.info(f"SpectralService.bound: область {resolve(spec).label}, n={n}")
        report = best_bound_report(spec, n=n, seed=seed)
        logger.info(f"SpectralService.bound: лучшая оценка {report.best_bound.formula}={report.best_bound.value:.6g}")
        for note in report.notes:
            logger.warning(f"SpectralService.bound: {note}")
        return report


    def fem(self, spec: DomainSpec, refine: int = 3, eigs: int = 3) -> SpectrumResult:
        spec = resolve(spec)
        logger.info(f"SpectralService.fem: область {spec.label}, refine={refine}, eigs={eigs}")
        started = time.perf_counter()
        try:
            mesh = triangulate(spec, refinement=refine)
            result = neumann_eigenvalues(mesh, k=eigs)
        except NeumannError as e:
            logger.error(f"SpectralService.fem: ошибка - {e}")
            raise
        self._observe("fem", time.perf_counter() - started, result.dof_count)
        logger.info(f"SpectralService.fem: mu1={result.mu1:.8g}, неизвестных {result.dof_count}")
        return result


    def fem_table(self, spec: DomainSpec, refine: int = 3) -> list[ConvergenceRow]:
        """Таблица сходимости по уровням 0..refine"""
        logger.info(f"SpectralService.fem_table: область {resolve(spec).label}, уровни 0..{refine}")
        started = time.perf_counter()
        rows = convergence_study(spec, range(refine + 1))
        self._observe("fem_table", time.perf_counter() - started, rows[-1].dof_count)
        return rows


    def verify(self, spec: DomainSpec, refine: int = 3, seed: int | None = None) -> VerificationRecord:
        spec = resolve(spec)
        logger.info(f"SpectralService.verify: область {spec.label}, refine={refine}")
        started = time.perf_counter()
        try:
            record = verify_bound(spec, refinement=refine, seed=seed)
        except NeumannError as e:
            logger.error(f"SpectralService.verify: {e}")
            raise
        self._observe("verify", time.perf_counter() - started, record.dof_count)
        logger.info(f"SpectralService.verify: fem mu1={record.fem_mu1:.8g}, все оценки ниже: {record.satisfied}")
        return record


    def reproduce(self, example: str, seed: int = 0) -> ReproductionReport:
        logger.info(f"SpectralService.reproduce: пример {example}")
        return reproduce(example, seed=seed)


    def _observe(self, name: str, seconds: float, dofs: int) -> None:
        if self.observer is not None:
            self.observer(name, seconds, dofs)
