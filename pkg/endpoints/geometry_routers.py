from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool

from loguru import logger

from endpoints.errors import to_http
from endpoints.service import spectral_service

from schema.domain_schema import DomainSpec, GeometrySummary
from schema.qc_schema import AffinePiece, QcRequest, QcSummary



router = APIRouter(prefix="/geometry", tags=["ГЕОМЕТРИЯ 📐"])


@router.post("/mecb", summary="Минимальный охватывающий шар и диаметр")
async def post_mecb(spec: DomainSpec, seed: int | None = None) -> GeometrySummary:
    try:
        logger.info(f"post_mecb: область {spec.label}")
        return await run_in_threadpool(spectral_service.mecb, spec, seed=seed)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_mecb: ошибка {e}")
        raise to_http(e)


@router.post("/qc", summary="Коэффициент квазиконформности")
async def post_qc(request: QcRequest) -> QcSummary:
    try:
        logger.info("post_qc: запрос принят")
        pieces = None
        if request.jacobians:
            pieces = [AffinePiece(jacobian=m, region_label=f"piece-{i}") for i, m in enumerate(request.jacobians)]
        return spectral_service.qc(pieces=pieces, beta=request.beta, gamma=request.gamma)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_qc: ошибка {e}")
        raise to_http(e)
