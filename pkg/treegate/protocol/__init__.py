"""
LOCC protocols over a rooted tree.

Exposed:
    Operation, CorrectionTable: Local operations and correction tables
    ProtocolStep, ProtocolSchedule: Step schedules
    build_ch_schedule, build_cu_schedule: Schedule builders
    parity_correction: CH phase-correction rule
    execute, enumerate_branches, Branch, ExecutionContext: Execution
    Transcript, TranscriptEntry: Run ledger
    fixture_tables: Published five-party tables
"""

from .executor import Branch, ExecutionContext, enumerate_branches, execute
from .fixtures import fixture_index, fixture_tables
from .operations import (
    CorrectionTable,
    Operation,
    Pattern,
    all_patterns,
    apply_operation,
    apply_operations,
    merge_tables,
    parse_operation,
    parse_operations,
    render_operations,
)
from .schedule import (
    ProtocolSchedule,
    ProtocolStep,
    build_ch_schedule,
    build_cu_schedule,
    cu_downward_rule,
    cu_downward_stage,
    cu_schedule_with,
    parity_correction,
    parity_table,
    upward_stage,
)
from .transcript import Transcript, TranscriptEntry, load_transcript

__all__ = [
    "Branch",
    "ExecutionContext",
    "enumerate_branches",
    "execute",
    "fixture_index",
    "fixture_tables",
    "CorrectionTable",
    "Operation",
    "Pattern",
    "all_patterns",
    "apply_operation",
    "apply_operations",
    "merge_tables",
    "parse_operation",
    "parse_operations",
    "render_operations",
    "ProtocolSchedule",
    "ProtocolStep",
    "build_ch_schedule",
    "build_cu_schedule",
    "cu_downward_rule",
    "cu_downward_stage",
    "cu_schedule_with",
    "parity_correction",
    "parity_table",
    "upward_stage",
    "Transcript",
    "TranscriptEntry",
    "load_transcript",
]
