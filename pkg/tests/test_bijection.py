import pytest

from twomotzkin.bijection import (category_census, classify_edges,
                                  path_to_tree, tree_to_path)
from twomotzkin.enumeration import plane_trees, two_motzkin_paths
from twomotzkin.structures import (EdgeCategory, EmptyTree, PlaneTree,
                                   TwoMotzkinStep, parse_path, parse_tree)

NTI = EdgeCategory.NON_TERMINAL_INTERIOR
NTE = EdgeCategory.NON_TERMINAL_EXTERIOR
TI = EdgeCategory.TERMINAL_INTERIOR
TE = EdgeCategory.TERMINAL_EXTERIOR
CRIT = EdgeCategory.CRITICAL


@pytest.mark.parametrize("tree, expected", [
    ("(())", [NTE, CRIT]),
    ("()()", [TI, CRIT]),
    ("(())()", [NTI, TE, CRIT]),
    ("()", [CRIT]),
])
def test_classify_edges(tree, expected):
    assert classify_edges(parse_tree(tree)) == expected


def test_exactly_one_critical_edge():
    for n in range(1, 8):
        for tree in plane_trees(n):
            categories = classify_edges(tree)
            assert len(categories) == n
            assert categories.count(CRIT) == 1
            assert categories[-1] is CRIT


@pytest.mark.parametrize("tree, path", [
    ("(())", "S"),
    ("()()", "W"),
    ("(())()", "UD"),
    ("()", ""),
])
def test_tree_to_path(tree, path):
    assert tree_to_path(parse_tree(tree)).encode() == path


def test_three_edge_trees_cover_all_length_two_paths():
    images = {tree_to_path(t).encode() for t in plane_trees(3)}
    assert images == {"SS", "SW", "UD", "WS", "WW"}


@pytest.mark.parametrize("path, tree", [
    ("S", "(())"),
    ("UD", "(())()"),
    ("", "()"),
])
def test_path_to_tree(path, tree):
    assert path_to_tree(parse_path(path, "2motzkin")).encode() == tree


def test_bijectivity_exhaustive():
    for n in range(1, 8):
        trees = list(plane_trees(n))
        images = [tree_to_path(t) for t in trees]
        assert all(len(p) == n - 1 for p in images)
        assert len(set(images)) == len(trees)
        assert set(images) == set(two_motzkin_paths(n - 1))
        for tree, image in zip(trees, images):
            assert path_to_tree(image) == tree
    for path in two_motzkin_paths(6):
        assert tree_to_path(path_to_tree(path)) == path


@pytest.mark.parametrize("tree, expected", [
    ("(())()", {NTI: 1, NTE: 0, TI: 0, TE: 1, CRIT: 1}),
    ("()", {NTI: 0, NTE: 0, TI: 0, TE: 0, CRIT: 1}),
    ("()()()", {NTI: 0, NTE: 0, TI: 2, TE: 0, CRIT: 1}),
])
def test_category_census(tree, expected):
    assert category_census(parse_tree(tree)) == expected


def test_interior_exterior_balance():
    for n in range(1, 8):
        for tree in plane_trees(n):
            census = category_census(tree)
            assert census[NTI] == census[TE]
            assert sum(census.values()) == n


def test_leaf_count_transports_to_steps():
    for n in range(1, 8):
        for tree in plane_trees(n):
            steps = tree_to_path(tree).steps
            wavy_or_down = sum(1 for s in steps
                               if s in (TwoMotzkinStep.WAVY, TwoMotzkinStep.DOWN))
            assert tree.leaf_count() == 1 + wavy_or_down


def test_empty_tree_is_rejected():
    with pytest.raises(EmptyTree):
        classify_edges(PlaneTree())
    with pytest.raises(EmptyTree):
        tree_to_path(PlaneTree())
    with pytest.raises(EmptyTree):
        category_census(PlaneTree())
