"""Tests for the closed-form resource counts."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from treegate.globals import ErrorCode, ProtocolError
from treegate.globals.enums import ProtocolKind
from treegate.network import (
    RootedTree,
    allocate_layout,
    enumerate_rooted_trees,
    path_tree,
    profile,
    star_tree,
)
from treegate.protocol import build_ch_schedule, execute
from treegate.qsim import ForcedAssignment, identity, new_basis_state
from treegate.resources import cbits, cbits_ch, cbits_cu, ebits, max_bell_pairs, steps


class TestFiveParty:
    """h = 2, n_1 = n_2 = 2."""

    def test_counts(self, five_party):
        """4 ebits; CH 10 cbits, 10 steps; CU 8 cbits, 13 steps."""
        tree_profile = profile(five_party)
        assert ebits(tree_profile) == 4
        assert cbits_ch(tree_profile) == 10
        assert cbits_cu(tree_profile) == 8
        assert steps(ProtocolKind.CH, tree_profile) == 10
        assert steps(ProtocolKind.CU, tree_profile) == 13
        assert max_bell_pairs(five_party) == 3

    def test_dispatch(self, five_party):
        """cbits picks the family's formula."""
        tree_profile = profile(five_party)
        assert cbits(ProtocolKind.CH, tree_profile) == 10
        assert cbits(ProtocolKind.CU, tree_profile) == 8


class TestNamedShapes:
    """Stars and paths."""

    @pytest.mark.parametrize("n", range(2, 12))
    def test_star(self, n):
        """The parallel network sends 2(n-1) cbits for CH."""
        tree_profile = profile(star_tree(n))
        assert cbits_ch(tree_profile) == 2 * (n - 1)
        assert steps(ProtocolKind.CH, tree_profile) == 7
        assert max_bell_pairs(star_tree(n)) == n - 1

    @pytest.mark.parametrize("n", range(2, 12))
    def test_path(self, n):
        """The linear network sends (n^2 + n - 2)/2 cbits for CH."""
        tree_profile = profile(path_tree(n))
        assert cbits_ch(tree_profile) == (n * n + n - 2) // 2
        assert steps(ProtocolKind.CU, tree_profile) == 6 * (n - 1) + 1

    def test_path_of_ten(self):
        """Ten parties on a line: 54 CH cbits."""
        assert cbits_ch(profile(path_tree(10))) == 54

    def test_path_holds_two_pairs(self):
        """Inner path parties hold two halves."""
        assert max_bell_pairs(path_tree(5)) == 2
        assert max_bell_pairs(path_tree(2)) == 1


class TestInvalid:
    """Degenerate trees."""

    def test_single_party(self):
        """Formulas refuse a lone target."""
        tree_profile = profile(RootedTree("T", {}))
        assert ebits(tree_profile) == 0
        for formula in (cbits_ch, cbits_cu):
            with pytest.raises(ProtocolError) as info:
                formula(tree_profile)
            assert info.value.error_code is ErrorCode.PROTOCOL_TOO_FEW_PARTIES
        with pytest.raises(ProtocolError):
            steps(ProtocolKind.CU, tree_profile)


@given(n=st.integers(min_value=2, max_value=7), data=st.data())
def test_cu_cbits_do_not_depend_on_shape(n, data):
    """Every rooted tree on n parties sends 2(n-1) cbits for CU."""
    trees = list(enumerate_rooted_trees(n))
    tree = data.draw(st.sampled_from(trees))
    assert cbits_cu(profile(tree)) == 2 * (n - 1)
    assert ebits(profile(tree)) == n - 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_formulas_match_executed_counters(n):
    """Executed CH runs report the predicted counters on every shape."""
    for tree in enumerate_rooted_trees(n):
        layout = allocate_layout(tree)
        schedule = build_ch_schedule(tree, layout)
        psi = new_basis_state(n, 0, layout.input_labels())
        _, transcript = execute(schedule, psi, identity(), ForcedAssignment({}))
        tree_profile = profile(tree)
        assert transcript.cbits == cbits_ch(tree_profile)
        assert transcript.step_count == steps(ProtocolKind.CH, tree_profile)
        assert transcript.ebits == ebits(tree_profile)


@pytest.mark.parametrize("n", range(2, 8))
def test_ch_cbits_are_bounded_by_star_and_path(n):
    """Among all shapes the star sends the fewest CH cbits and the path the most."""
    counts = [cbits_ch(profile(tree)) for tree in enumerate_rooted_trees(n)]
    assert min(counts) == cbits_ch(profile(star_tree(n))) == 2 * (n - 1)
    assert max(counts) == cbits_ch(profile(path_tree(n))) == (n * n + n - 2) // 2
    assert counts.count(min(counts)) == 1
    assert counts.count(max(counts)) == 1
