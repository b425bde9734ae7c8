"""
Ground truth for the protocols.

Exposed:
    oracle_ch, oracle_ch_ordered, oracle_cu, stage_reference: References
    verify_branch, BranchVerdict: Output comparison
    CorrectionDictionary, ch_dictionary, cu_dictionary: Correction vocabularies
    solve_correction, derive_cu_corrections: Correction solver
    regenerate_tables, render_diff_report: Published-table diff
"""

from .reference import (
    BranchVerdict,
    oracle_ch,
    oracle_ch_ordered,
    oracle_cu,
    stage_reference,
    verify_branch,
)
from .solver import (
    CorrectionDictionary,
    ch_dictionary,
    clear_cache,
    cu_dictionary,
    derive_cu_corrections,
    solve_correction,
)
from .tables import RowComparison, TableComparison, regenerate_tables, render_diff_report

__all__ = [
    "BranchVerdict",
    "oracle_ch",
    "oracle_ch_ordered",
    "oracle_cu",
    "stage_reference",
    "verify_branch",
    "CorrectionDictionary",
    "ch_dictionary",
    "clear_cache",
    "cu_dictionary",
    "derive_cu_corrections",
    "solve_correction",
    "RowComparison",
    "TableComparison",
    "regenerate_tables",
    "render_diff_report",
]
