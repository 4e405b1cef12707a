import sys

import click

from core.errors import EXIT_INPUT

from cli.app import app



def main(argv: list[str] | None = None) -> int:
    """Точка входа: ошибки использования дают код 1, код 2 зарезервирован за численными сбоями"""
    try:
        code = app(args=argv, prog_name="neumann", standalone_mode=False)
    except click.exceptions.UsageError as e:
        e.show()
        return EXIT_INPUT
    except click.exceptions.Abort:
        return EXIT_INPUT
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(main())
