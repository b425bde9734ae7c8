"""
treegate - rooted-tree LOCC protocols for non-local gates

Simulates and verifies the protocols that implement a non-local
controlled-Hermitian (CH) or multiparty controlled-unitary (CU) gate
among n parties sharing one Bell pair per edge of a rooted tree.

Exposed:
    RootedTree, allocate_layout, five_party_tree, ...: Party networks
    build_ch_schedule, build_cu_schedule, execute, ...: Protocols
    oracle_ch, oracle_cu, verify_branch: References
    comparison_report: Resource accounting
    ProtocolKind, ...: Enumerations
    TreegateError, ...: Exceptions

Example:
    >>> import treegate
    >>>
    >>> tree = treegate.five_party_tree()
    >>> layout = treegate.allocate_layout(tree)
    >>> schedule = treegate.build_ch_schedule(tree, layout)
    >>> schedule.step_count
    10
"""

from .globals import (
    ErrorCode,
    ImpossibleBranchError,
    MeasurementBasis,
    Numbering,
    ProtocolError,
    ProtocolKind,
    SimulationError,
    SolverError,
    TreegateError,
    TreeError,
    ValidationError,
)
from .network import (
    QubitLayout,
    RootedTree,
    allocate_layout,
    enumerate_rooted_trees,
    five_party_tree,
    parse_tree,
    parse_tree_text,
    path_tree,
    profile,
    star_tree,
)
from .oracle import oracle_ch, oracle_cu, regenerate_tables, verify_branch
from .protocol import (
    build_ch_schedule,
    build_cu_schedule,
    enumerate_branches,
    execute,
    fixture_tables,
)
from .resources import comparison_report

__version__ = "0.1.0"

__all__ = [
    "ErrorCode",
    "ImpossibleBranchError",
    "MeasurementBasis",
    "Numbering",
    "ProtocolError",
    "ProtocolKind",
    "SimulationError",
    "SolverError",
    "TreegateError",
    "TreeError",
    "ValidationError",
    "QubitLayout",
    "RootedTree",
    "allocate_layout",
    "enumerate_rooted_trees",
    "five_party_tree",
    "parse_tree",
    "parse_tree_text",
    "path_tree",
    "profile",
    "star_tree",
    "oracle_ch",
    "oracle_cu",
    "regenerate_tables",
    "verify_branch",
    "build_ch_schedule",
    "build_cu_schedule",
    "enumerate_branches",
    "execute",
    "fixture_tables",
    "comparison_report",
]
