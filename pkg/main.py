import logging
import sys
from typing import List, Optional

import click
import typer

from constants import EXIT_OK, TOOL_NAME, TOOL_VERSION
from controllers import bounds_controller, code_controller, gen_controller, gic_controller, report_controller, \
    verify_controller
from utils.exceptions import (
    IcxException,
    cli_exception_handler,
    general_exception_handler,
    usage_error_handler,
)

logger = logging.getLogger(__name__)


def _version(value: bool):
    if value:
        typer.echo(f"{TOOL_NAME} {TOOL_VERSION}")
        raise typer.Exit()


app = typer.Typer(
    name=TOOL_NAME,
    help="Bounds and verified vector-linear codes for index coding.",
    no_args_is_help=True,
    pretty_exceptions_enable=False,
    add_completion=False,
)


@app.callback()
def root(version: bool = typer.Option(False, "--version", callback=_version, is_eager=True,
                                      help="Print the version and exit")):
    pass


# Include command routers
app.add_typer(bounds_controller.router)
app.add_typer(code_controller.router)
app.add_typer(verify_controller.router)
app.add_typer(report_controller.router)
app.add_typer(gic_controller.router)
app.add_typer(gen_controller.router, name="gen")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run icx and translate failures into the exit-code contract.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    args = sys.argv[1:] if argv is None else list(argv)
    command = typer.main.get_command(app)
    try:
        result = command.main(args=args, prog_name=TOOL_NAME, standalone_mode=False)
    except IcxException as e:
        return cli_exception_handler(e)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.UsageError as e:
        return usage_error_handler(e.format_message())
    except click.ClickException as e:
        return usage_error_handler(e.format_message())
    except click.Abort:
        return usage_error_handler("aborted")
    except Exception as e:
        return general_exception_handler(e)
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
