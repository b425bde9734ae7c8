"""
Command-line interface.

Exposes the main Typer application, with the protocol commands
registered, and the main function for the Poetry entry point.

Exposed:
    app: Typer application instance
    main: Entry point function
"""

from . import protocol_cmds  # noqa: F401  (registers the commands)
from .main import app, main

__all__ = ["app", "main"]
