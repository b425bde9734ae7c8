"""
Main module for the command-line interface (CLI).

This module creates the Typer application; the protocol commands
register themselves on it when `treegate.cli.protocol_cmds` is imported.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
"""

from typing import Optional

import typer

from treegate.core.config import get_config

app = typer.Typer(
    help="Simulate and verify rooted-tree LOCC protocols for non-local gates.",
    no_args_is_help=True,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIGURATION_ERROR = 2


def _print_version(value: bool) -> None:
    if value:
        config = get_config()
        typer.echo(f"{config.app_name} {config.version}")
        raise typer.Exit(EXIT_OK)


@app.callback()
def root(
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        callback=_print_version,
        is_eager=True,
        help="Show the application name and version and exit.",
    ),
) -> None:
    """Simulate and verify rooted-tree LOCC protocols for non-local gates."""


def main():
    """Entry point for Poetry and `python -m treegate`."""
    from treegate.cli import protocol_cmds  # noqa: F401

    app()
