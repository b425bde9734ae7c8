"""
Resource accounting.

Exposed:
    ebits, cbits, cbits_ch, cbits_cu, steps, max_bell_pairs: Closed forms
    ResourceReport, ResourceRow, comparison_report: Network comparison
"""

from .formulas import cbits, cbits_ch, cbits_cu, ebits, max_bell_pairs, steps
from .report import ResourceReport, ResourceRow, comparison_report, resource_row

__all__ = [
    "cbits",
    "cbits_ch",
    "cbits_cu",
    "ebits",
    "max_bell_pairs",
    "steps",
    "ResourceReport",
    "ResourceRow",
    "comparison_report",
    "resource_row",
]
