"""Five-way edge classification of plane trees and the step-for-edge
correspondence with 2-Motzkin paths.

For an internal vertex, the edge to its last child is exterior and the
edges to the other children are interior; an edge whose child is a leaf is
terminal. Following exterior edges down from the root ends at a leaf, and
that last edge, which is also the last edge in preorder, is the critical
edge. So every edge of a nonempty tree is exactly one of: non-terminal
interior, non-terminal exterior, terminal interior, terminal exterior, or
critical.

Reading the edges in preorder and drawing one step per non-critical edge
(up for non-terminal interior, straight level for non-terminal exterior,
wavy level for terminal interior, down for terminal exterior, nothing for
the critical edge) sends a tree with n edges to a 2-Motzkin path of length
n - 1. The path never dips below the axis because every tree has as many
non-terminal interior edges as terminal exterior ones, prefix by prefix.
The map is a bijection; `path_to_tree` rebuilds the tree from the path.
"""

from __future__ import annotations

from .structures import (EdgeCategory, EmptyTree, PlaneTree, TwoMotzkinPath,
                         TwoMotzkinStep)

STEP_FOR_CATEGORY = {
    EdgeCategory.NON_TERMINAL_INTERIOR: TwoMotzkinStep.UP,
    EdgeCategory.NON_TERMINAL_EXTERIOR: TwoMotzkinStep.STRAIGHT,
    EdgeCategory.TERMINAL_INTERIOR: TwoMotzkinStep.WAVY,
    EdgeCategory.TERMINAL_EXTERIOR: TwoMotzkinStep.DOWN,
}


def classify_edges(tree: PlaneTree) -> list[EdgeCategory]:
    """Category of every edge, in preorder; index = preorder edge index."""
    if not tree.children:
        raise EmptyTree("edge classification needs at least one edge")
    categories: list[EdgeCategory] = []

    def visit(vertex: PlaneTree) -> None:
        last = len(vertex.children) - 1
        for i, child in enumerate(vertex.children):
            exterior = i == last
            terminal = not child.children
            if terminal:
                categories.append(EdgeCategory.TERMINAL_EXTERIOR if exterior
                                  else EdgeCategory.TERMINAL_INTERIOR)
            else:
                categories.append(EdgeCategory.NON_TERMINAL_EXTERIOR if exterior
                                  else EdgeCategory.NON_TERMINAL_INTERIOR)
            visit(child)

    visit(tree)
    # The last edge in preorder is the one reached from the root along last
    # children, so it is terminal exterior before the override.
    assert categories[-1] is EdgeCategory.TERMINAL_EXTERIOR
    categories[-1] = EdgeCategory.CRITICAL
    return categories


def tree_to_path(tree: PlaneTree) -> TwoMotzkinPath:
    """Image of the tree: one step per non-critical edge, in preorder."""
    categories = classify_edges(tree)
    return TwoMotzkinPath(tuple(STEP_FOR_CATEGORY[c] for c in categories[:-1]))


def path_to_tree(path: TwoMotzkinPath) -> PlaneTree:
    """Rebuild the unique tree whose edge walk produces the given path.

    Scan the steps keeping a stack of vertices that still owe children. An
    up step starts a new internal non-last child and descends into it,
    remembering where to come back; a straight level step descends into a
    new last child for good; a wavy level step attaches a leaf that is not
    the last child; a down step attaches a leaf as the last child and
    climbs back. One final leaf (the critical edge) closes the single
    vertex still open at the end.
    """
    root: list = []
    stack: list[list] = []
    current = root
    for step in path:
        if step is TwoMotzkinStep.UP:
            child: list = []
            current.append(child)
            stack.append(current)
            current = child
        elif step is TwoMotzkinStep.STRAIGHT:
            child = []
            current.append(child)
            current = child
        elif step is TwoMotzkinStep.WAVY:
            current.append([])
        else:
            current.append([])
            current = stack.pop()
    current.append([])
    assert not stack

    def freeze(node: list) -> PlaneTree:
        return PlaneTree(tuple(freeze(child) for child in node))

    return freeze(root)


def category_census(tree: PlaneTree) -> dict[EdgeCategory, int]:
    """How many edges fall in each of the five categories; sums to n."""
    census = {category: 0 for category in EdgeCategory}
    for category in classify_edges(tree):
        census[category] += 1
    return census
