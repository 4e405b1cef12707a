from typing import Optional

import typer

from pydantic import ValidationError

from core.config import CLI_LOG_LEVEL, get_seed
from core.errors import EXIT_INPUT
from core.logging import configure_logging

from schema.run_schema import RunConfig

from cli.runner import run



app = typer.Typer(
    name="neumann",
    help="Нижние оценки первого собственного значения Неймана и их проверка МКЭ",
    no_args_is_help=True,
    add_completion=False,
)

OutputOption = typer.Option("json", "--output", help="json или csv")
SeedOption = typer.Option(None, "--seed", help="seed перемешивания точек MECB")


@app.callback()
def main_callback() -> None:
    configure_logging(CLI_LOG_LEVEL)


def execute(**flags) -> None:
    """Проверка флагов, запуск команды, печать документа; код завершения через typer.Exit"""
    if flags.get("seed") is None:
        flags["seed"] = get_seed()
    try:
        config = RunConfig(**flags)
    except ValidationError as e:
        messages = "; ".join(error["msg"] for error in e.errors())
        typer.echo(f"error: {messages}", err=True)
        raise typer.Exit(EXIT_INPUT)

    outcome = run(config)
    for message in outcome.warnings:
        typer.echo(f"warning: {message}" if outcome.exit_code == 0 else f"error: {message}", err=True)
    if outcome.output:
        typer.echo(outcome.output)
    raise typer.Exit(outcome.exit_code)


@app.command("pzero")
def pzero(n: int = typer.Option(..., "--n", help="размерность n >= 2"),
          output: str = OutputOption) -> None:
    """Первый положительный ноль (t^{1-n/2} J_{n/2}(t))'"""
    execute(command="pzero", n=n, output=output)


@app.command("mikhlin")
def mikhlin(n: int = typer.Option(..., "--n"),
            R: float = typer.Option(..., "--R"),
            output: str = OutputOption) -> None:
    """Квадрат нормы продолжения из B_1 в B_R"""
    execute(command="mikhlin", n=n, R=R, output=output)


@app.command("mikhlin-star")
def mikhlin_star(n: int = typer.Option(..., "--n"),
                 R: float = typer.Option(..., "--R"),
                 m1: float = typer.Option(..., "--m1"),
                 m2: float = typer.Option(..., "--m2"),
                 m3: float = typer.Option(..., "--m3"),
                 output: str = OutputOption) -> None:
    """Верхняя оценка квадрата нормы продолжения для звёздной области"""
    execute(command="mikhlin-star", n=n, R=R, m1=m1, m2=m2, m3=m3, output=output)


@app.command("qc")
def qc(jacobians: Optional[str] = typer.Option(None, "--jacobians", help="JSON список матриц 2x2"),
       beta: Optional[float] = typer.Option(None, "--beta"),
       gamma: Optional[float] = typer.Option(None, "--gamma"),
       output: str = OutputOption) -> None:
    """Коэффициент квазиконформности K"""
    execute(command="qc", jacobians_path=jacobians, beta=beta, gamma=gamma, output=output)


@app.command("mecb")
def mecb(domain: str = typer.Option(..., "--domain"),
         seed: Optional[int] = SeedOption,
         output: str = OutputOption) -> None:
    """Минимальный охватывающий шар и диаметр"""
    execute(command="mecb", domain_path=domain, seed=seed, output=output)


@app.command("bound")
def bound(domain: str = typer.Option(..., "--domain"),
          n: Optional[int] = typer.Option(None, "--n"),
          csv: bool = typer.Option(False, "--csv", help="то же, что --output csv"),
          seed: Optional[int] = SeedOption,
          output: str = OutputOption) -> None:
    """Все применимые нижние оценки mu_1"""
    execute(command="bound", domain_path=domain, n=n, seed=seed, output="csv" if csv else output)


@app.command("fem")
def fem(domain: str = typer.Option(..., "--domain"),
        refine: int = typer.Option(3, "--refine"),
        eigs: int = typer.Option(3, "--eigs"),
        table: bool = typer.Option(False, "--table", help="таблица сходимости по уровням 0..refine"),
        output: str = OutputOption) -> None:
    """Собственные значения Неймана методом конечных элементов"""
    execute(command="fem", domain_path=domain, refine=refine, eigs=eigs, table=table, output=output)


@app.command("verify")
def verify(domain: str = typer.Option(..., "--domain"),
           refine: int = typer.Option(3, "--refine"),
           seed: Optional[int] = SeedOption,
           output: str = OutputOption) -> None:
    """Сравнение оценок с mu_1 на сетке"""
    execute(command="verify", domain_path=domain, refine=refine, seed=seed, output=output)


@app.command("reproduce")
def reproduce(example: str = typer.Argument(..., help="bowtie, half_ball, tan_star, mikhlin_table, pzero_table"),
              seed: Optional[int] = SeedOption,
              output: str = OutputOption) -> None:
    """Воспроизведение опубликованного примера"""
    execute(command="reproduce", example=example, seed=seed, output=output)
