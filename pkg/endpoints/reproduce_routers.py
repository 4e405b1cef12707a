from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool

from loguru import logger

from endpoints.errors import to_http
from endpoints.service import spectral_service

from schema.run_schema import ReproductionReport



router = APIRouter(prefix="/reproduce", tags=["ВОСПРОИЗВЕДЕНИЕ 📄"])


@router.get("/{example}", summary="Воспроизвести опубликованный пример")
async def get_reproduction(example: str, seed: int = 0) -> ReproductionReport:
    try:
        logger.info(f"get_reproduction: пример {example}")
        return await run_in_threadpool(spectral_service.reproduce, example, seed=seed)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"get_reproduction: ошибка {e}")
        raise to_http(e)
