"""
Published correction tables of the five-party protocols.

Labels follow the five-party numbering (inputs 1, 3, 7, 9, 13; pairs
(2,5), (4,6), (8,11), (10,12)). Rows are transcribed literally, pattern
bits in the order of the table's keys, operations right to left.
"""

from __future__ import annotations

from collections.abc import Mapping
from functools import cache
from types import MappingProxyType

from treegate.globals.enums import MeasurementBasis, ProtocolKind

from .operations import CorrectionTable, Pattern, parse_operations

FixtureKey = tuple[ProtocolKind, int, tuple[str, ...]]

_C = MeasurementBasis.COMPUTATIONAL
_H = MeasurementBasis.HADAMARD

# (name, kind, stage, actors, keys, basis, rows); Hadamard rows use +/-
_TABLES: tuple[tuple, ...] = (
    (
        "1",
        ProtocolKind.CH,
        4,
        ("S11",),
        (2, 4),
        _C,
        {
            "00": "CN^8_5 CN^8_6 CN^8_7",
            "10": "CN^8_5 CN^8_6 CN^8_7 sx^5",
            "01": "CN^8_5 CN^8_6 CN^8_7 sx^6",
            "11": "CN^8_5 CN^8_6 CN^8_7 sx^5 sx^6",
        },
    ),
    (
        "2",
        ProtocolKind.CH,
        7,
        ("T",),
        (8, 10),
        _C,
        {
            "00": "CH^13_11 CH^13_12",
            "10": "CH^13_11 CH^13_12 sx^11",
            "01": "CH^13_11 CH^13_12 sx^12",
            "11": "CH^13_11 CH^13_12 sx^11 sx^12",
        },
    ),
    (
        "3",
        ProtocolKind.CH,
        10,
        ("S21", "S22", "S11", "S12"),
        (5, 6, 11, 12),
        _H,
        {
            "++++": "I",
            "+++-": "sz^9",
            "++-+": "sz^1 sz^3 sz^7",
            "+-++": "sz^3",
            "-+++": "sz^1",
            "++--": "sz^1 sz^3 sz^7 sz^9",
            "--++": "sz^1 sz^3",
            "+--+": "sz^1 sz^7",
            "-++-": "sz^1 sz^9",
            "+-+-": "sz^3 sz^9",
            "-+-+": "sz^3 sz^7",
            "+---": "sz^1 sz^7 sz^9",
            "-+--": "sz^3 sz^7 sz^9",
            "--+-": "sz^1 sz^3 sz^9",
            "---+": "sz^7",
            "----": "sz^7 sz^9",
        },
    ),
    (
        "4",
        ProtocolKind.CU,
        4,
        ("S11",),
        (2, 4),
        _C,
        {
            "00": "CN^8_{5,6,7}",
            "10": "CN^8_{5,6,7} sx^5",
            "01": "CN^8_{5,6,7} sx^6",
            "11": "CN^8_{5,6,7} sx^5 sx^6",
        },
    ),
    (
        "5",
        ProtocolKind.CU,
        7,
        ("T",),
        (8, 10),
        _C,
        {
            "00": "CU^13_{11,12}",
            "10": "CU^13_{11,12} sx^11",
            "01": "CU^13_{11,12} sx^12",
            "11": "CU^13_{11,12} sx^11 sx^12",
        },
    ),
    (
        "6",
        ProtocolKind.CU,
        10,
        ("S11", "S12"),
        (11, 12),
        _H,
        {
            "++": "sz^9",
            "+-": "I",
            "-+": "CZ^7_{5,6} sz^9",
            "--": "CZ^7_{5,6}",
        },
    ),
    (
        "7",
        ProtocolKind.CU,
        13,
        ("S21", "S22"),
        (5, 6),
        _H,
        {
            "++": "sz^3",
            "+-": "I",
            "-+": "sz^1 sz^3",
            "--": "sz^1",
        },
    ),
)


@cache
def fixture_tables() -> Mapping[str, CorrectionTable]:
    """The seven published tables by name ("1" .. "7"), read-only."""
    return MappingProxyType(
        {
            name: CorrectionTable(
                kind,
                stage,
                actors,
                keys,
                basis,
                {_pattern(text): parse_operations(ops) for text, ops in rows.items()},
            )
            for name, kind, stage, actors, keys, basis, rows in _TABLES
        }
    )


def fixture_index() -> dict[FixtureKey, CorrectionTable]:
    """The tables keyed by (kind, stage, actors)."""
    return {(t.kind, t.stage, t.actors): t for t in fixture_tables().values()}


def _pattern(text: str) -> Pattern:
    return tuple(1 if symbol in "1-" else 0 for symbol in text)
