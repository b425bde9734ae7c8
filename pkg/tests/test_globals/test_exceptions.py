"""Tests for the treegate exception hierarchy."""

import os

from treegate.globals import (
    ErrorCode,
    ErrorContext,
    ImpossibleBranchError,
    ProtocolError,
    SimulationError,
    SolverError,
    TreegateError,
    TreeError,
    ValidationError,
)
from treegate.globals.exceptions import unknown_qubit, validation_failed


def test_treegate_error():
    """Test the base TreegateError exception."""
    error = TreegateError("Test message")
    assert str(error) == "[TG-1000] Test message"
    assert isinstance(error, Exception)


def test_impossible_branch_error():
    """Test the ImpossibleBranchError exception."""
    error = ImpossibleBranchError(qubit=5, outcome=1, probability=0.0)

    assert error.qubit == 5
    assert error.outcome == 1
    assert error.probability == 0.0
    assert error.error_code is ErrorCode.QSIM_IMPOSSIBLE_BRANCH
    assert str(error).startswith("[TG-2006] Impossible branch: outcome 1 on qubit 5")
    assert isinstance(error, SimulationError)


def test_tree_error_cites_line():
    """Test that TreeError prefixes the offending line number."""
    error = TreeError("cycle", line_number=4, error_code=ErrorCode.TREE_CYCLE)

    assert error.line_number == 4
    assert str(error) == "[TG-3001] line 4: cycle"


def test_tree_error_without_line():
    """Test TreeError without line information."""
    error = TreeError("tree has no root", error_code=ErrorCode.TREE_MISSING_ROOT)
    assert str(error) == "[TG-3004] tree has no root"
    assert error.line_number is None


def test_protocol_error_step_index():
    """Test that ProtocolError keeps the step index."""
    error = ProtocolError(
        "missing", step_index=9, error_code=ErrorCode.PROTOCOL_MISSING_MESSAGE
    )
    assert error.step_index == 9
    assert str(error) == "[TG-5003] missing"


def test_solver_error_default_code():
    """Test the SolverError default code."""
    assert SolverError("none").error_code is ErrorCode.SOLVER_NO_SOLUTION


def test_unknown_qubit_helper():
    """Test the unknown_qubit constructor."""
    error = unknown_qubit(42, (1, 2))
    assert error.qubit == 42
    assert error.error_code is ErrorCode.QSIM_UNKNOWN_LABEL
    assert "live: [1, 2]" in str(error)


def test_validation_failed_helper():
    """Test the validation_failed constructor."""
    error = validation_failed("bit", 3, "forced outcome must be 0 or 1")
    assert error.field_name == "bit"
    assert error.field_value == 3
    assert str(error) == (
        "[TG-4001] Validation failed for field 'bit': forced outcome must be 0 or 1"
    )


def test_to_dict():
    """Test the dictionary form of an error."""
    cause = ValueError("boom")
    error = TreegateError("wrapped", ErrorCode.INVALID_CONFIGURATION, cause=cause)
    data = error.to_dict()

    assert data["error_code"] == "TG-1001"
    assert data["message"] == "[TG-1001] wrapped"
    assert data["cause"] == "boom"
    assert "timestamp" in data


def test_context_enriched_from_active_exception():
    """Test that errors raised while handling another pick up the frame."""
    try:
        raise ValueError("inner")
    except ValueError:
        error = TreegateError("outer")
    # this module's name also ends in "exceptions.py"
    assert error.context.function == "test_context_enriched_from_active_exception"
    assert os.path.realpath(error.context.module) == os.path.realpath(__file__)
    assert error.context.line_number is not None


def test_context_skips_frames_of_the_exception_module():
    """Test that a failure inside the exceptions module reports its caller."""
    try:
        # the probability format fails inside ImpossibleBranchError.__init__
        ImpossibleBranchError(1, 0, "not a float")
    except ValueError:
        error = TreegateError("bad probability")
    assert error.context.function == "test_context_skips_frames_of_the_exception_module"


def test_explicit_context_is_kept():
    """Test that an explicit context is not replaced."""
    context = ErrorContext(module="m", function="f", line_number=1)
    error = TreegateError("x", context=context)
    assert error.context is context


def test_explicit_code_overrides_default():
    """Test that an explicit code wins over the class default."""
    error = SimulationError("x", qubit=3, error_code=ErrorCode.QSIM_NOT_UNITARY)
    assert error.error_code is ErrorCode.QSIM_NOT_UNITARY
    assert SimulationError("y").error_code is ErrorCode.QSIM_UNKNOWN_LABEL
    assert ValidationError("z").error_code is ErrorCode.VALIDATION_REQUIRED_FIELD


def test_context_without_active_exception():
    """Test that a fresh error gets an empty location."""
    error = ProtocolError("no active exception")
    assert error.context.function is None
    assert error.context.user_data == {}


def test_exception_hierarchy():
    """Test that all exceptions inherit from TreegateError."""
    exceptions = [
        SimulationError("a"),
        ImpossibleBranchError(1, 0, 0.0),
        TreeError("b"),
        ValidationError("c"),
        ProtocolError("d"),
        SolverError("e"),
    ]
    for exception in exceptions:
        assert isinstance(exception, TreegateError)


def test_error_codes_are_unique():
    """Test that no two error codes share a value."""
    values = [code.value for code in ErrorCode]
    assert len(values) == len(set(values))
    assert all(value.startswith("TG-") for value in values)
