import pytest
from hypothesis import given, settings, strategies as st

from twomotzkin.bijection import tree_to_path
from twomotzkin.enumeration import plane_trees
from twomotzkin.poly import ONE, Poly, X, ZERO
from twomotzkin.structures import (EdgeCategory, EmptyTree, MotzkinStep,
                                   TwoMotzkinStep, parse_path, parse_tree)
from twomotzkin.weights import (EdgeWeighting, MotzkinWeighting,
                                ProductMismatch, StepWeighting,
                                edge_weighting_from_json, merge_levels,
                                motzkin_weighting_from_json, path_weight,
                                rebalance_up_down, step_weighting_from_json,
                                step_weights_from_edges, theorem1_edge_weights,
                                theorem1_step_weights, theorem2_edge_weights,
                                theorem2_step_weights, total_motzkin_weight,
                                total_motzkin_weight_enumerated,
                                total_path_weight, total_path_weight_enumerated,
                                total_tree_weight, tree_weight)

SQUARED = (ONE + X) ** 2

small_polys = st.builds(lambda cs: Poly(tuple(cs)),
                        st.lists(st.integers(-2, 2), max_size=3))
step_weightings = st.builds(
    lambda u, d, s, w: StepWeighting({
        TwoMotzkinStep.UP: u, TwoMotzkinStep.DOWN: d,
        TwoMotzkinStep.STRAIGHT: s, TwoMotzkinStep.WAVY: w}),
    small_polys, small_polys, small_polys, small_polys)


def test_builtin_edge_weights():
    first = theorem1_edge_weights()
    assert first[EdgeCategory.TERMINAL_INTERIOR] == X
    assert first[EdgeCategory.TERMINAL_EXTERIOR] == X
    assert first[EdgeCategory.CRITICAL] == ONE
    assert first[EdgeCategory.NON_TERMINAL_INTERIOR] == ONE
    second = theorem2_edge_weights()
    assert second[EdgeCategory.NON_TERMINAL_INTERIOR] == Poly((1, 2, 1))
    assert second[EdgeCategory.TERMINAL_EXTERIOR] == X ** 2
    assert second[EdgeCategory.CRITICAL] == ONE


def test_builtin_step_weights():
    first = theorem1_step_weights()
    assert first[TwoMotzkinStep.UP] == ONE
    assert first[TwoMotzkinStep.STRAIGHT] == ONE
    assert first[TwoMotzkinStep.DOWN] == X
    assert first[TwoMotzkinStep.WAVY] == X
    second = theorem2_step_weights()
    assert second[TwoMotzkinStep.UP] == SQUARED
    assert second[TwoMotzkinStep.DOWN] == X ** 2


def test_weightings_must_be_total():
    with pytest.raises(ValueError):
        StepWeighting({TwoMotzkinStep.UP: ONE})
    with pytest.raises(ValueError):
        EdgeWeighting({EdgeCategory.CRITICAL: ONE})


def test_tree_weight_examples():
    first = theorem1_edge_weights()
    assert tree_weight(parse_tree("(())"), first) == ONE
    assert tree_weight(parse_tree("()()"), first) == X
    assert tree_weight(parse_tree("()"), theorem2_edge_weights()) == ONE
    with pytest.raises(EmptyTree):
        tree_weight(parse_tree(""), first)


def test_path_weight_examples():
    first = theorem1_step_weights()
    assert path_weight(parse_path("W", "2motzkin"), first) == X
    assert path_weight(parse_path("UD", "2motzkin"),
                       theorem2_step_weights()) == SQUARED * X ** 2
    assert path_weight(parse_path("", "2motzkin"), first) == ONE


def test_total_weight_examples():
    assert total_tree_weight(2, theorem1_edge_weights()) == ONE + X
    assert total_path_weight(1, theorem1_step_weights()) == ONE + X
    assert total_tree_weight(2, theorem2_edge_weights()) == Poly((1, 2, 2))
    with pytest.raises(EmptyTree):
        total_tree_weight(0, theorem1_edge_weights())


def test_merge_levels():
    merged = merge_levels(theorem2_step_weights())
    assert merged[MotzkinStep.LEVEL] == Poly((1, 2, 2))
    assert merged[MotzkinStep.UP] == SQUARED
    assert merge_levels(theorem1_step_weights())[MotzkinStep.LEVEL] == ONE + X
    ones = StepWeighting({step: ONE for step in TwoMotzkinStep})
    assert merge_levels(ones)[MotzkinStep.LEVEL] == Poly((2,))


def test_rebalance_up_down():
    balanced = X * (ONE + X)
    rebalanced = rebalance_up_down(theorem2_step_weights(), balanced, balanced)
    assert rebalanced[TwoMotzkinStep.UP] == balanced
    assert rebalanced[TwoMotzkinStep.DOWN] == balanced
    assert rebalanced[TwoMotzkinStep.WAVY] == X ** 2
    with pytest.raises(ProductMismatch):
        rebalance_up_down(theorem2_step_weights(), X, X)
    first = theorem1_step_weights()
    unchanged = rebalance_up_down(first, first[TwoMotzkinStep.UP],
                                  first[TwoMotzkinStep.DOWN])
    assert unchanged == first


def test_total_motzkin_weight_examples():
    merged2 = merge_levels(theorem2_step_weights())
    assert total_motzkin_weight(1, merged2) == Poly((1, 2, 2))
    assert total_motzkin_weight(0, merged2) == ONE
    lopsided = MotzkinWeighting({MotzkinStep.UP: X, MotzkinStep.DOWN: X,
                                 MotzkinStep.LEVEL: ONE + X})
    assert total_motzkin_weight(2, lopsided) == Poly((1, 2, 2))


def test_transfer_recurrence_matches_enumeration():
    for weighting in (theorem1_step_weights(), theorem2_step_weights()):
        for m in range(7):
            assert (total_path_weight(m, weighting)
                    == total_path_weight_enumerated(m, weighting))
    merged = merge_levels(theorem2_step_weights())
    for m in range(7):
        assert (total_motzkin_weight(m, merged)
                == total_motzkin_weight_enumerated(m, merged))


@settings(max_examples=25, deadline=None)
@given(step_weightings)
def test_transfer_recurrence_matches_enumeration_fuzzed(weighting):
    for m in range(5):
        assert (total_path_weight(m, weighting)
                == total_path_weight_enumerated(m, weighting))


def test_bijection_transports_weights():
    pairs = [(theorem1_edge_weights(), theorem1_step_weights()),
             (theorem2_edge_weights(), theorem2_step_weights())]
    for n in range(1, 8):
        for tree in plane_trees(n):
            path = tree_to_path(tree)
            for edges, steps in pairs:
                assert tree_weight(tree, edges) == path_weight(path, steps)


def test_transport_up_to_critical_factor():
    # A critical weight other than 1 multiplies every tree weight, since the
    # critical edge emits no step.
    edges = EdgeWeighting({
        EdgeCategory.NON_TERMINAL_INTERIOR: ONE + X,
        EdgeCategory.NON_TERMINAL_EXTERIOR: Poly((2,)),
        EdgeCategory.TERMINAL_INTERIOR: X,
        EdgeCategory.TERMINAL_EXTERIOR: X ** 2,
        EdgeCategory.CRITICAL: ONE + X,
    })
    steps = step_weights_from_edges(edges)
    critical = edges[EdgeCategory.CRITICAL]
    for n in range(1, 6):
        for tree in plane_trees(n):
            assert (tree_weight(tree, edges)
                    == path_weight(tree_to_path(tree), steps) * critical)


@settings(max_examples=25, deadline=None)
@given(step_weightings)
def test_merging_levels_preserves_totals(weighting):
    for m in range(6):
        assert (total_path_weight(m, weighting)
                == total_motzkin_weight(m, merge_levels(weighting)))


def test_rebalancing_preserves_totals():
    balanced = X * (ONE + X)
    rebalanced = rebalance_up_down(theorem2_step_weights(), balanced, balanced)
    for m in range(7):
        assert (total_path_weight(m, theorem2_step_weights())
                == total_path_weight(m, rebalanced))
    # Same with plain integer weights: 4*9 = 6*6.
    lopsided = StepWeighting({TwoMotzkinStep.UP: Poly((4,)),
                              TwoMotzkinStep.DOWN: Poly((9,)),
                              TwoMotzkinStep.STRAIGHT: ONE,
                              TwoMotzkinStep.WAVY: X})
    even = rebalance_up_down(lopsided, Poly((6,)), Poly((6,)))
    for m in range(6):
        assert total_path_weight(m, lopsided) == total_path_weight(m, even)


def test_json_loaders():
    steps = step_weighting_from_json({"Up": "1", "Down": "x",
                                      "StraightLevel": "1", "WavyLevel": "x"})
    assert steps == theorem1_step_weights()
    merged = motzkin_weighting_from_json({"Up": "x", "Down": "x",
                                          "Level": "1 + x"})
    assert merged[MotzkinStep.LEVEL] == ONE + X
    collapsed = motzkin_weighting_from_json({"Up": "1", "Down": "x",
                                             "StraightLevel": "1",
                                             "WavyLevel": "x"})
    assert collapsed == merge_levels(theorem1_step_weights())
    edges = edge_weighting_from_json({
        "NonTerminalInterior": "1", "NonTerminalExterior": "1",
        "TerminalInterior": "x", "TerminalExterior": "x", "Critical": "1"})
    assert edges == theorem1_edge_weights()
    with pytest.raises(ValueError):
        step_weighting_from_json({"Sideways": "1"})
    with pytest.raises(ValueError):
        edge_weighting_from_json({"Critical": "1"})
