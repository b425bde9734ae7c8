"""Tests for CH and CU schedule construction."""

import pytest

from treegate.commands import ClassicalSend, ConditionalCorrection, LocalGate, Measure
from treegate.globals import ErrorCode, ProtocolError
from treegate.globals.enums import MeasurementBasis, ProtocolKind
from treegate.network import RootedTree, allocate_layout, path_tree, star_tree
from treegate.protocol import (
    ProtocolSchedule,
    ProtocolStep,
    build_ch_schedule,
    build_cu_schedule,
    cu_downward_rule,
    cu_downward_stage,
    fixture_tables,
    parity_correction,
    parity_table,
    render_operations,
    upward_stage,
)


def _rows(table):
    return {pattern: render_operations(ops) for pattern, ops in table.rows.items()}


@pytest.fixture
def ch_schedule(five_party, five_party_layout):
    return build_ch_schedule(five_party, five_party_layout)


@pytest.fixture
def cu_schedule(five_party, five_party_layout):
    return build_cu_schedule(five_party, five_party_layout)


class TestStepCounts:
    """3h+4 steps for CH, 6h+1 for CU."""

    @pytest.mark.parametrize(
        ("tree", "ch_steps", "cu_steps"),
        [
            (star_tree(2), 7, 7),
            (star_tree(5), 7, 7),
            (path_tree(5), 16, 25),
            (path_tree(3), 10, 13),
        ],
    )
    def test_named_shapes(self, tree, ch_steps, cu_steps):
        """Step counts follow the height only."""
        layout = allocate_layout(tree)
        assert build_ch_schedule(tree, layout).step_count == ch_steps
        assert build_cu_schedule(tree, layout).step_count == cu_steps

    def test_five_party(self, ch_schedule, cu_schedule):
        """h = 2: 10 CH steps and 13 CU steps."""
        assert ch_schedule.step_count == 10
        assert cu_schedule.step_count == 13

    def test_stage_helpers(self):
        """Upward and downward stage indices."""
        assert upward_stage(2, 2) == 4
        assert upward_stage(2, 1) == 7
        assert cu_downward_stage(2, 1) == 10
        assert cu_downward_stage(2, 2) == 13

    def test_too_few_parties(self, five_party_layout):
        """A lone target has nothing to be controlled by."""
        lone = RootedTree("T", {})
        with pytest.raises(ProtocolError) as info:
            build_ch_schedule(lone, five_party_layout)
        assert info.value.error_code is ErrorCode.PROTOCOL_TOO_FEW_PARTIES
        with pytest.raises(ProtocolError):
            build_cu_schedule(lone, five_party_layout)


class TestChSchedule:
    """Five-party CH schedule."""

    def test_leaves_start_with_cnot(self, ch_schedule):
        """Step 1 holds the leaves' CN from input to child half."""
        first = [s for s in ch_schedule if s.index == 1]
        assert all(isinstance(s.action, LocalGate) for s in first)
        assert {s.actor: s.action.describe() for s in first} == {
            "S12": "CN^10_9",
            "S21": "CN^2_1",
            "S22": "CN^4_3",
        }

    def test_measurements(self, ch_schedule):
        """Child halves upward, then every parent half in the Hadamard basis."""
        assert ch_schedule.measured_qubits() == (2, 4, 8, 10, 11, 12, 5, 6)
        hadamard = {
            s.action.qubit: s.index
            for s in ch_schedule
            if isinstance(s.action, Measure) and s.action.basis is MeasurementBasis.HADAMARD
        }
        assert hadamard == {5: 8, 6: 8, 11: 8, 12: 8}

    def test_outcomes_broadcast_to_subtree(self, ch_schedule):
        """The outcome of half 11 reaches all of the S11 subtree."""
        sends = {
            s.action.qubit: s.action.recipients
            for s in ch_schedule
            if isinstance(s.action, ClassicalSend) and s.index == 9
        }
        assert sends == {11: ("S11", "S21", "S22"), 12: ("S12",), 5: ("S21",), 6: ("S22",)}

    def test_correction_stages(self, ch_schedule):
        """Corrections at 4, 7 and 10."""
        assert ch_schedule.correction_stages() == (4, 7, 10)
        with pytest.raises(ProtocolError):
            ch_schedule.correction_tables(5)

    @pytest.mark.parametrize(("name", "stage"), [("1", 4), ("2", 7), ("3", 10)])
    def test_generated_tables_equal_published(self, ch_schedule, name, stage):
        """The CH tables are reproduced exactly."""
        published = fixture_tables()[name]
        generated = ch_schedule.correction_tables(stage)
        assert generated.keys == published.keys
        assert _rows(generated) == _rows(published)

    def test_render(self, ch_schedule):
        """One header plus one line per step."""
        text = ch_schedule.render()
        lines = text.splitlines()
        assert lines[0] == "ch schedule: 5 parties, 10 steps"
        assert len(lines) == len(ch_schedule) + 1
        assert "measure 11 (hadamard)" in text

    def test_prefix(self, ch_schedule):
        """prefix(stop) keeps the steps before stop."""
        prefix = ch_schedule.prefix(5)
        assert prefix.step_count == 4
        assert prefix.correction_stages() == (4,)


class TestCuSchedule:
    """Five-party CU schedule."""

    def test_correction_stages(self, cu_schedule):
        """Corrections at 4, 7, 10 and 13."""
        assert cu_schedule.correction_stages() == (4, 7, 10, 13)

    @pytest.mark.parametrize(("name", "stage"), [("4", 4), ("5", 7)])
    def test_upward_tables_equal_published(self, cu_schedule, name, stage):
        """The upward CU tables are reproduced exactly."""
        published = fixture_tables()[name]
        generated = cu_schedule.correction_tables(stage)
        assert generated.keys == published.keys
        assert _rows(generated) == _rows(published)

    def test_downward_sends_go_to_the_child_only(self, cu_schedule):
        """Each Hadamard outcome is one cbit to the child sharing the pair."""
        sends = [s for s in cu_schedule if isinstance(s.action, ClassicalSend) and s.index > 7]
        assert {s.action.qubit: s.action.recipients for s in sends} == {
            11: ("S11",),
            12: ("S12",),
            5: ("S21",),
            6: ("S22",),
        }

    def test_downward_tables(self, cu_schedule):
        """Stage 10 and 13 rows of the derived downward corrections."""
        assert _rows(cu_schedule.correction_tables(10)) == {
            (0, 0): "I",
            (0, 1): "sz^9",
            (1, 0): "CZ^7_{5,6}",
            (1, 1): "CZ^7_{5,6} sz^9",
        }
        assert _rows(cu_schedule.correction_tables(13)) == {
            (0, 0): "I",
            (0, 1): "sz^3",
            (1, 0): "sz^1",
            (1, 1): "sz^1 sz^3",
        }

    def test_explicit_downward(self, five_party, five_party_layout):
        """Closed-form downward rules can be passed in."""
        downward = {
            party: cu_downward_rule(
                five_party, five_party_layout, party, cu_downward_stage(2, depth)
            )
            for depth, level in enumerate(five_party.levels())
            for party in level
            if depth > 0
        }
        schedule = build_cu_schedule(five_party, five_party_layout, downward)
        assert schedule.step_count == 13

    def test_missing_downward(self, five_party, five_party_layout):
        """Every control party needs a downward table."""
        with pytest.raises(ProtocolError) as info:
            build_cu_schedule(five_party, five_party_layout, {})
        assert info.value.error_code is ErrorCode.PROTOCOL_INVALID_SCHEDULE


class TestParity:
    """CH phase correction."""

    def test_even_parity_is_identity(self):
        """Two |-> outcomes cancel."""
        assert parity_correction({5: 1, 11: 1}, "S21", 1) == ()

    def test_odd_parity_flips(self):
        """One |-> outcome gives sz on the input."""
        assert render_operations(parity_correction({5: 1, 11: 0}, "S21", 1)) == "sz^1"
        assert render_operations(parity_correction({12: 1}, "S12", 9)) == "sz^9"

    def test_parity_table_keys(self, five_party, five_party_layout):
        """A party's keys are the parent halves on its path to the root."""
        table = parity_table(five_party, five_party_layout, "S22", 10)
        assert table.keys == (6, 11)
        assert table.kind is ProtocolKind.CH


class TestValidation:
    """Static messaging checks."""

    def test_correction_without_message(self, five_party, five_party_layout):
        """Corrections must read outcomes delivered earlier."""
        table = parity_table(five_party, five_party_layout, "S12", 3)
        schedule = ProtocolSchedule(
            ProtocolKind.CH,
            five_party,
            five_party_layout,
            (ProtocolStep(3, "S12", ConditionalCorrection(table)),),
        )
        with pytest.raises(ProtocolError) as info:
            schedule.validate()
        assert info.value.error_code is ErrorCode.PROTOCOL_MISSING_MESSAGE

    def test_send_before_measure(self, five_party, five_party_layout):
        """A party can only send outcomes it measured."""
        schedule = ProtocolSchedule(
            ProtocolKind.CH,
            five_party,
            five_party_layout,
            (
                ProtocolStep(1, "S21", ClassicalSend(2, ("S11",))),
                ProtocolStep(2, "S21", Measure(2, MeasurementBasis.COMPUTATIONAL)),
            ),
        )
        with pytest.raises(ProtocolError):
            schedule.validate()

    def test_built_schedules_validate(self, ch_schedule, cu_schedule):
        """Builders only return valid schedules."""
        ch_schedule.validate()
        cu_schedule.validate()
