from typing import Literal

from fastapi import APIRouter, HTTPException

from loguru import logger

from endpoints.errors import to_http
from endpoints.service import spectral_service

from schema.run_schema import PZeroResult

from special_functions.bessel import bessel_i, bessel_j, bessel_k



router = APIRouter(prefix="/special", tags=["СПЕЦИАЛЬНЫЕ ФУНКЦИИ 🧮"])

BESSEL = {"j": bessel_j, "i": bessel_i, "k": bessel_k}


@router.get("/pzero", summary="Первый ноль p_{n/2}")
async def get_p_zero(n: int) -> PZeroResult:
    try:
        logger.info(f"get_p_zero: запрос n={n}")
        return spectral_service.p_zero(n)
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"get_p_zero: ошибка {e}")
        raise to_http(e)


@router.get("/bessel/{kind}", summary="Функции Бесселя J, I, K")
async def get_bessel(kind: Literal["j", "i", "k"], nu: float, x: float) -> dict:
    try:
        logger.info(f"get_bessel: {kind}_{nu}({x})")
        return {"kind": kind, "nu": nu, "x": x, "value": BESSEL[kind](nu, x)}
    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"get_bessel: ошибка {e}")
        raise to_http(e)
