"""Tests for the error-handling helpers."""

import numpy as np
import pytest

from treegate.core.error_handling import (
    create_validation_error,
    format_error_for_user,
    handle_simulation_errors,
    validate_seed,
)
from treegate.globals import ErrorCode, SimulationError, TreeError, ValidationError


def test_validate_seed():
    """Test seed validation."""
    assert validate_seed("42") == 42
    assert validate_seed(0) == 0

    with pytest.raises(ValidationError) as info:
        validate_seed("forty-two")
    assert info.value.context.user_data["suggestions"] == ["use e.g. sampled:42"]

    with pytest.raises(ValidationError) as info:
        validate_seed(-1)
    assert info.value.error_code is ErrorCode.VALIDATION_OUT_OF_RANGE


def test_create_validation_error_suggestions():
    """Test that suggestions are stored in the context."""
    error = create_validation_error(
        "cannot read state 'half'", "state", "half", suggestions=["zero", "plus"]
    )
    assert error.field_name == "state"
    assert error.error_code is ErrorCode.VALIDATION_INVALID_FORMAT
    assert error.context.user_data["suggestions"] == ["zero", "plus"]


def test_format_error_for_user():
    """Test the CLI rendering of errors."""
    with_hint = create_validation_error("bad kind", "kind", suggestions=["ch", "cu"])
    assert format_error_for_user(with_hint) == "[TG-4001] bad kind\nhint: ch, cu"

    plain = TreeError("cycle", error_code=ErrorCode.TREE_CYCLE)
    assert format_error_for_user(plain) == "[TG-3001] cycle"
    assert format_error_for_user(ValueError("raw")) == "raw"


def test_handle_simulation_errors_wraps_numpy():
    """Test that numerical failures become SimulationError."""

    @handle_simulation_errors("invert")
    def invert(matrix):
        return np.linalg.inv(matrix)

    with pytest.raises(SimulationError) as info:
        invert(np.zeros((2, 2)))
    assert info.value.error_code is ErrorCode.QSIM_NOT_UNITARY
    assert isinstance(info.value.cause, np.linalg.LinAlgError)


def test_handle_simulation_errors_wraps_value_errors():
    """Test that value errors become SimulationError."""

    @handle_simulation_errors("reshape")
    def reshape():
        return np.zeros(3).reshape(2, 2)

    with pytest.raises(SimulationError) as info:
        reshape()
    assert info.value.error_code is ErrorCode.QSIM_LABEL_MISMATCH
    assert "reshape" in str(info.value)


def test_handle_simulation_errors_passes_treegate_errors():
    """Test that treegate errors are not re-wrapped."""

    @handle_simulation_errors("tree")
    def fail():
        raise TreeError("as is")

    with pytest.raises(TreeError):
        fail()
