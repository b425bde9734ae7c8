from treegate.globals import (
    GateKind,
    MatchStatus,
    MeasurementBasis,
    NetworkShape,
    Numbering,
    OpKind,
    ProtocolKind,
)


def test_protocol_kind_enum():
    """Test the ProtocolKind values used on the command line."""
    assert ProtocolKind.CH.value == "ch"
    assert ProtocolKind.CU.value == "cu"
    assert ProtocolKind("cu") is ProtocolKind.CU
    assert len(list(ProtocolKind)) == 2


def test_measurement_basis_enum():
    """Test the MeasurementBasis enum."""
    assert MeasurementBasis.COMPUTATIONAL.value == "computational"
    assert MeasurementBasis.HADAMARD.value == "hadamard"


def test_gate_kind_enum():
    """Test the GateKind tags."""
    kinds = {kind.value for kind in GateKind}
    assert kinds == {
        "hermitian_involutory",
        "unitary",
        "pauli_x",
        "pauli_z",
        "hadamard",
        "identity",
    }


def test_op_kind_order():
    """Test that OpKind declares the solver tie-break order."""
    assert [kind.value for kind in OpKind] == ["sx", "sz", "CN", "CZ", "CH", "CU"]


def test_numbering_enum():
    """Test the Numbering values."""
    assert Numbering("five-party") is Numbering.FIVE_PARTY
    assert Numbering("canonical") is Numbering.CANONICAL


def test_network_shape_and_status():
    """Test the report and diff enums."""
    assert [shape.value for shape in NetworkShape] == ["parallel", "linear", "rooted-tree"]
    assert MatchStatus.MATCH.value == "MATCH"
    assert MatchStatus.DIFF.value == "DIFF"
