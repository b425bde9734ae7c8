"""Tests for the network comparison report."""

import csv
import io

import pytest

from treegate.globals import ProtocolError
from treegate.globals.enums import NetworkShape, ProtocolKind
from treegate.network import RootedTree
from treegate.resources import comparison_report


def _triple(report, network):
    row = report.row(network)
    return row.cbits, row.steps, row.max_bell_pairs


class TestFivePartyReport:
    """Parallel, linear and rooted-tree rows for five parties."""

    def test_ch_rows(self, five_party):
        """CH: cbits 8/14/10, steps 7/16/10."""
        report = comparison_report(ProtocolKind.CH, five_party)
        assert _triple(report, NetworkShape.PARALLEL) == (8, 7, 4)
        assert _triple(report, NetworkShape.LINEAR) == (14, 16, 2)
        assert _triple(report, NetworkShape.TREE) == (10, 10, 3)

    def test_cu_rows(self, five_party):
        """CU: 8 cbits everywhere, steps 7/25/13."""
        report = comparison_report(ProtocolKind.CU, five_party)
        assert _triple(report, NetworkShape.PARALLEL) == (8, 7, 4)
        assert _triple(report, NetworkShape.LINEAR) == (8, 25, 2)
        assert _triple(report, NetworkShape.TREE) == (8, 13, 3)

    def test_every_row_uses_four_ebits(self, five_party):
        """Any five-party tree needs four Bell pairs."""
        report = comparison_report(ProtocolKind.CH, five_party)
        assert {row.ebits for row in report.rows} == {4}
        assert report.height == 2
        assert report.counts == ((1, 2), (2, 2))


class TestOutput:
    """Text and CSV forms."""

    def test_csv(self, five_party):
        """One header and three records."""
        text = comparison_report(ProtocolKind.CH, five_party).to_csv()
        lines = text.splitlines()
        assert lines[0] == "kind,network,n,h,ebits,cbits,steps,max_bell_pairs"
        records = list(csv.DictReader(io.StringIO(text)))
        assert [r["network"] for r in records] == ["parallel", "linear", "rooted-tree"]
        assert records[2] == {
            "kind": "ch",
            "network": "rooted-tree",
            "n": "5",
            "h": "2",
            "ebits": "4",
            "cbits": "10",
            "steps": "10",
            "max_bell_pairs": "3",
        }

    def test_render(self, five_party):
        """Header, column line, rule and three rows."""
        text = comparison_report(ProtocolKind.CU, five_party).render()
        lines = text.splitlines()
        assert lines[0] == "cu protocol, n=5, h=2 (n_1=2, n_2=2)"
        assert lines[1].split() == list(
            ("network", "n", "h", "ebits", "cbits", "steps", "max_bell_pairs")
        )
        assert set(lines[2]) <= {"-", " "}
        assert lines[3].split() == ["parallel", "5", "1", "4", "8", "7", "4"]
        assert len(lines) == 6

    def test_records(self, five_party):
        """Records carry the protocol family."""
        records = comparison_report(ProtocolKind.CH, five_party).to_records()
        assert all(r["kind"] == "ch" for r in records)


def test_single_party_rejected():
    """A lone target has no report."""
    with pytest.raises(ProtocolError):
        comparison_report(ProtocolKind.CH, RootedTree("T", {}))
