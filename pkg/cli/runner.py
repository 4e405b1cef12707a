"""
Выполнение одной команды: RunConfig -> (код завершения, документ для stdout, предупреждения для stderr).
Коды: 0 - успех, 1 - ошибка входных данных, 2 - численный сбой.
"""

import csv
import io
import json

from dataclasses import dataclass, field

from loguru import logger

from pydantic import BaseModel, ValidationError

from core.config import get_float_digits
from core.errors import EXIT_INPUT, EXIT_NUMERICAL, EXIT_OK, NeumannError, exit_code_for

from schema.bound_schema import BoundReport
from schema.norm_schema import StarShapeData
from schema.run_schema import ReproductionReport, RunConfig

from services.spectral_service import SpectralService, load_domain, load_jacobians



PZERO_DECIMALS = 10


@dataclass
class RunOutcome:
    exit_code: int
    output: str = ""
    warnings: list[str] = field(default_factory=list)


def round_floats(value, digits: int):
    """Округление всех вещественных чисел документа до digits значащих цифр"""
    if isinstance(value, float):
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {key: round_floats(item, digits) for key, item in value.items()}
    if isinstance(value, list):
        return [round_floats(item, digits) for item in value]
    return value


def _flatten(row: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, prefix=f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value)
        else:
            flat[name] = value
    return flat


def csv_rows(document) -> list[dict]:
    """Строки CSV: по одной на оценку, строку таблицы или утверждение"""
    if isinstance(document, list):
        return [_flatten(item) for item in document]
    if "bounds" in document:
        return [_flatten(bound) for bound in document["bounds"]]
    if "claims" in document:
        return [_flatten(claim) for claim in document["claims"]]
    if "checks" in document:
        return [_flatten(check) for check in document["checks"]]
    return [_flatten(document)]


def to_csv(document) -> str:
    rows = csv_rows(document)
    columns: list[str] = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def serialize(result, config: RunConfig) -> str:
    if isinstance(result, list):
        document = [item.model_dump(mode="json") for item in result]
    else:
        document = result.model_dump(mode="json", by_alias=True)

    if config.command == "pzero":
        document["p"] = round(document["p"], PZERO_DECIMALS)
    else:
        document = round_floats(document, get_float_digits())

    if config.output == "csv":
        return to_csv(document)
    return json.dumps(document, indent=2, ensure_ascii=False)


def dispatch(config: RunConfig, service: SpectralService) -> BaseModel | list[BaseModel]:
    command = config.command
    if command == "pzero":
        return service.p_zero(config.n)
    if command == "mikhlin":
        return service.mikhlin(config.n, config.R)
    if command == "mikhlin-star":
        data = StarShapeData(M1=config.m1, M2=config.m2, M3=config.m3, n=config.n, R=config.R)
        return service.mikhlin_star(data)
    if command == "qc":
        pieces = load_jacobians(config.jacobians_path) if config.jacobians_path else None
        return service.qc(pieces=pieces, beta=config.beta, gamma=config.gamma)
    if command == "reproduce":
        return service.reproduce(config.example, seed=config.seed)

    spec = load_domain(config.domain_path)
    if command == "mecb":
        return service.mecb(spec, seed=config.seed)
    if command == "bound":
        return service.bound(spec, n=config.n, seed=config.seed)
    if command == "fem":
        if config.table:
            return service.fem_table(spec, refine=config.refine)
        return service.fem(spec, refine=config.refine, eigs=config.eigs)
    return service.verify(spec, refine=config.refine, seed=config.seed)


def _warnings(result) -> list[str]:
    if isinstance(result, BoundReport):
        return list(result.notes)
    if isinstance(result, ReproductionReport):
        flagged = [
            f"{claim.name}: computed {claim.computed:.6g}, published {claim.published_value:.6g}"
            for claim in result.discrepancies
        ]
        return flagged + list(result.notes)
    return []


def run(config: RunConfig, service: SpectralService | None = None) -> RunOutcome:
    """Выполняет команду; никогда не выбрасывает исключения наружу"""
    service = service or SpectralService()
    try:
        result = dispatch(config, service)
        return RunOutcome(EXIT_OK, serialize(result, config), _warnings(result))
    except ValidationError as e:
        logger.debug(f"run: validation failed for {config.command}: {e}")
        return RunOutcome(EXIT_INPUT, warnings=[f"invalid input: {e}"])
    except NeumannError as e:
        logger.debug(f"run: {config.command} failed with {type(e).__name__}: {e}")
        return RunOutcome(exit_code_for(e), warnings=[f"{type(e).__name__}: {e}"])
    except Exception as e:
        # scipy и numpy сбои вне иерархии NeumannError
        logger.exception(f"run: {config.command} failed unexpectedly")
        return RunOutcome(EXIT_NUMERICAL, warnings=[f"internal error: {type(e).__name__}: {e}"])
