from fastapi import HTTPException

from pydantic import ValidationError

from core.errors import InputError



def to_http(error: Exception) -> HTTPException:
    """Ошибки входных данных -> 422, численные сбои и прочее -> 500"""
    if isinstance(error, HTTPException):
        return error
    if isinstance(error, (InputError, ValidationError)):
        return HTTPException(status_code=422, detail=str(error))
    return HTTPException(status_code=500, detail=f"{type(error).__name__}: {error}")
