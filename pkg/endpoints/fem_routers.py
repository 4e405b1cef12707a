from fastapi import APIRouter, HTTPException, Query
from fastapi.concurrency import run_in_threadpool

from loguru import logger

from endpoints.errors import to_http
from endpoints.service import spectral_service

from schema.domain_schema import DomainSpec
from schema.fem_schema import ConvergenceRow, SpectrumResult, VerificationRecord



router = APIRouter(prefix="/fem", tags=["МКЭ ПРОВЕРКА 🔺"])


@router.post("/spectrum", summary="Собственные значения Неймана")
async def post_spectrum(spec: DomainSpec,
                        refine: int = Query(3, ge=0, le=8),
                        eigs: int = Query(3, ge=2, le=10)) -> SpectrumResult:
    try:
        logger.info(f"post_spectrum: область {spec.label}, refine={refine}")
        return await run_in_threadpool(spectral_service.fem, spec, refine=refine, eigs=eigs)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_spectrum: ошибка {e}")
        raise to_http(e)


@router.post("/table", summary="Таблица сходимости mu_1,h")
async def post_table(spec: DomainSpec, refine: int = Query(3, ge=0, le=8)) -> list[ConvergenceRow]:
    try:
        logger.info(f"post_table: область {spec.label}, уровни 0..{refine}")
        return await run_in_threadpool(spectral_service.fem_table, spec, refine=refine)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_table: ошибка {e}")
        raise to_http(e)


@router.post("/verify", summary="Проверка оценок на сетке")
async def post_verify(spec: DomainSpec, refine: int = Query(3, ge=0, le=8),
                      seed: int | None = None) -> VerificationRecord:
    try:
        logger.info(f"post_verify: область {spec.label}")
        return await run_in_threadpool(spectral_service.verify, spec, refine=refine, seed=seed)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"post_verify: ошибка {e}")
        raise to_http(e)
