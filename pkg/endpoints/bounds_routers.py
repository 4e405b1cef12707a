from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool

from loguru import logger

from core.metrics import BOUND_REPORTS

from endpoints.errors import to_http
from endpoints.service import spectral_service

from schema.bound_schema import BoundReport
from schema.domain_schema import DomainSpec
from schema.norm_schema import ExtensionNormEstimate, StarShapeData



router = APIRouter(prefix="/bounds", tags=["ОЦЕНКИ mu_1 📉"])


@router.post("/report", summary="Все применимые нижние оценки")
async def post_report(spec: DomainSpec, n: int | None = None, seed: int | None = None) -> BoundReport:
    try:
        logger.info(f"post_report: область {spec.label}")
        report = await run_in_threadpool(spectral_service.bound, spec, n=n, seed=seed)
        BOUND_REPORTS.labels(formula=report.best_bound.formula).inc()
        return report
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_report: ошибка {e}")
        raise to_http(e)


@router.get("/mikhlin", summary="Норма продолжения из B_1 в B_R")
async def get_mikhlin(n: int, R: float) -> ExtensionNormEstimate:
    try:
        logger.info(f"get_mikhlin: n={n}, R={R}")
        return spectral_service.mikhlin(n, R)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"get_mikhlin: ошибка {e}")
        raise to_http(e)


@router.post("/mikhlin-star", summary="Оценка нормы продолжения для звёздной области")
async def post_mikhlin_star(data: StarShapeData) -> ExtensionNormEstimate:
    try:
        logger.info("post_mikhlin_star: запрос принят")
        return spectral_service.mikhlin_star(data)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_mikhlin_star: ошибка {e}")
        raise to_http(e)
