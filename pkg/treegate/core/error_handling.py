"""
Error-handling helpers.

Turns numpy and parsing failures into treegate exceptions, and
formats treegate exceptions for the command line.
"""

import functools
from typing import Any, Callable, Optional, TypeVar

import numpy as np

from treegate.core.logging_system import get_logger
from treegate.globals.exceptions import (
    ErrorCode,
    SimulationError,
    TreegateError,
    ValidationError,
)

logger = get_logger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

# Foreign exception -> code of the SimulationError it becomes
_SIMULATION_FAILURES: dict[type[Exception], ErrorCode] = {
    np.linalg.LinAlgError: ErrorCode.QSIM_NOT_UNITARY,
    ValueError: ErrorCode.QSIM_LABEL_MISMATCH,
    IndexError: ErrorCode.QSIM_LABEL_MISMATCH,
}


def handle_simulation_errors(operation: str = "unknown") -> Callable[[F], F]:
    """
    Decorator for statevector operations.

    treegate errors pass through; linear-algebra, value and index errors
    are re-raised as SimulationError naming ``operation``.
    """

    def decorator(func: F) -> F:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except TreegateError:
                raise
            except tuple(_SIMULATION_FAILURES) as e:
                code = next(
                    c for kind, c in _SIMULATION_FAILURES.items() if isinstance(e, kind)
                )
                logger.error(
                    "simulation failure", operation=operation, error=type(e).__name__
                )
                raise SimulationError(
                    f"{type(e).__name__} during '{operation}': {e}",
                    error_code=code,
                    cause=e,
                ) from e

        return wrapper  # type: ignore[return-value]

    return decorator


def validate_seed(seed: Any) -> int:
    """Parses a sampling seed; it must be a non-negative integer."""
    try:
        value = int(seed)
    except (TypeError, ValueError) as e:
        raise create_validation_error(
            f"Seed must be an integer, got {seed!r}",
            field_name="seed",
            field_value=seed,
            suggestions=["use e.g. sampled:42"],
        ) from e
    if value < 0:
        raise ValidationError(
            "Seed must be non-negative",
            field_name="seed",
            field_value=seed,
            error_code=ErrorCode.VALIDATION_OUT_OF_RANGE,
        )
    return value


def create_validation_error(
    message: str,
    field_name: str,
    field_value: Any = None,
    suggestions: Optional[list[str]] = None,
) -> ValidationError:
    """ValidationError whose suggestions the CLI prints as a hint."""
    error = ValidationError(
        message,
        field_name=field_name,
        field_value=field_value,
        error_code=ErrorCode.VALIDATION_INVALID_FORMAT,
    )
    if suggestions:
        error.context.user_data["suggestions"] = list(suggestions)
    return error


def format_error_for_user(error: Exception) -> str:
    """
    One-line diagnostic, plus a ``hint:`` line when suggestions exist.

    Example:
        [TG-4001] unknown report format 'json'
        hint: text, csv
    """
    text = str(error)
    if isinstance(error, TreegateError):
        suggestions = error.context.user_data.get("suggestions")
        if suggestions:
            text += f"\nhint: {', '.join(suggestions)}"
    return text
