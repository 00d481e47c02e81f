"""Weight systems on tree edges and path steps, with exact total-weight
evaluators and the weight-preserving reductions between them.

A weighting assigns a polynomial to each edge category or step kind; the
weight of a tree or path is the product over its edges or steps, and totals
are summed over the whole family at one size. Totals over paths come in two
flavors: a height-indexed transfer recurrence (fast) and brute-force
enumeration (the oracle); they must agree exactly, which the tests check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .bijection import STEP_FOR_CATEGORY, classify_edges
from .enumeration import motzkin_paths, plane_trees, two_motzkin_paths
from .poly import ONE, Poly, X, ZERO, parse_poly
from .structures import (EdgeCategory, EmptyTree, MotzkinPath, MotzkinStep,
                         PlaneTree, TwoMotzkinPath, TwoMotzkinStep)


class ProductMismatch(ValueError):
    """New up/down weights whose product differs from the original pair's."""


def _require_total(mapping, keys, what: str) -> dict:
    missing = set(keys) - set(mapping)
    if missing:
        names = ", ".join(sorted(k.value for k in missing))
        raise ValueError(f"{what} must assign every kind; missing {names}")
    extra = set(mapping) - set(keys)
    if extra:
        raise ValueError(f"{what} has unknown keys: {sorted(extra, key=str)}")
    return {key: mapping[key] for key in keys}


@dataclass(frozen=True)
class EdgeWeighting:
    """A polynomial weight for each of the five edge categories."""

    by_category: Mapping[EdgeCategory, Poly]

    def __post_init__(self):
        object.__setattr__(self, "by_category", _require_total(
            self.by_category, EdgeCategory, "edge weighting"))

    def __getitem__(self, category: EdgeCategory) -> Poly:
        return self.by_category[category]


@dataclass(frozen=True)
class StepWeighting:
    """A polynomial weight for each of the four 2-Motzkin step kinds."""

    by_step: Mapping[TwoMotzkinStep, Poly]

    def __post_init__(self):
        object.__setattr__(self, "by_step", _require_total(
            self.by_step, TwoMotzkinStep, "step weighting"))

    def __getitem__(self, step: TwoMotzkinStep) -> Poly:
        return self.by_step[step]


@dataclass(frozen=True)
class MotzkinWeighting:
    """A polynomial weight for each of the three Motzkin step kinds."""

    by_step: Mapping[MotzkinStep, Poly]

    def __post_init__(self):
        object.__setattr__(self, "by_step", _require_total(
            self.by_step, MotzkinStep, "Motzkin weighting"))

    def __getitem__(self, step: MotzkinStep) -> Poly:
        return self.by_step[step]


_SQUARED = (ONE + X) ** 2


def theorem1_edge_weights() -> EdgeWeighting:
    """Weight x on every non-critical terminal edge, 1 elsewhere, so a
    tree's weight is x to the power (leaf count - 1)."""
    return EdgeWeighting({
        EdgeCategory.NON_TERMINAL_INTERIOR: ONE,
        EdgeCategory.NON_TERMINAL_EXTERIOR: ONE,
        EdgeCategory.TERMINAL_INTERIOR: X,
        EdgeCategory.TERMINAL_EXTERIOR: X,
        EdgeCategory.CRITICAL: ONE,
    })


def theorem2_edge_weights() -> EdgeWeighting:
    """Weight x^2 on non-critical terminal edges, (1+x)^2 on non-terminal
    edges, 1 on the critical edge."""
    return EdgeWeighting({
        EdgeCategory.NON_TERMINAL_INTERIOR: _SQUARED,
        EdgeCategory.NON_TERMINAL_EXTERIOR: _SQUARED,
        EdgeCategory.TERMINAL_INTERIOR: X ** 2,
        EdgeCategory.TERMINAL_EXTERIOR: X ** 2,
        EdgeCategory.CRITICAL: ONE,
    })


def step_weights_from_edges(edges: EdgeWeighting) -> StepWeighting:
    """The step weighting that matches an edge weighting through the
    tree-to-path map (the critical edge emits no step and is dropped)."""
    return StepWeighting({step: edges[category]
                          for category, step in STEP_FOR_CATEGORY.items()})


def theorem1_step_weights() -> StepWeighting:
    return step_weights_from_edges(theorem1_edge_weights())


def theorem2_step_weights() -> StepWeighting:
    return step_weights_from_edges(theorem2_edge_weights())


def tree_weight(tree: PlaneTree, weighting: EdgeWeighting) -> Poly:
    """Product of the category weights of the tree's edges."""
    acc = ONE
    for category in classify_edges(tree):
        acc = acc * weighting[category]
    return acc


def path_weight(path: TwoMotzkinPath, weighting: StepWeighting) -> Poly:
    """Product of the step weights; the empty path weighs 1."""
    acc = ONE
    for step in path:
        acc = acc * weighting[step]
    return acc


def motzkin_path_weight(path: MotzkinPath, weighting: MotzkinWeighting) -> Poly:
    acc = ONE
    for step in path:
        acc = acc * weighting[step]
    return acc


def total_tree_weight(edge_count: int, weighting: EdgeWeighting) -> Poly:
    """Sum of tree_weight over every tree with `edge_count` edges."""
    if edge_count < 1:
        raise EmptyTree("total tree weight needs at least one edge")
    acc = ZERO
    for tree in plane_trees(edge_count):
        acc = acc + tree_weight(tree, weighting)
    return acc


def _walk_total(length: int, up: Poly, level: Poly, down: Poly) -> Poly:
    # layer[h] = total weight of prefixes ending at height h; heights that
    # cannot return to the axis in the remaining steps are pruned.
    layer = {0: ONE}
    for placed in range(length):
        remaining = length - placed - 1
        next_layer: dict[int, Poly] = {}
        for height, acc in layer.items():
            if height + 1 <= remaining:
                next_layer[height + 1] = next_layer.get(height + 1, ZERO) + acc * up
            if height <= remaining:
                next_layer[height] = next_layer.get(height, ZERO) + acc * level
            if height > 0:
                next_layer[height - 1] = next_layer.get(height - 1, ZERO) + acc * down
        layer = next_layer
    return layer.get(0, ZERO)


def total_path_weight(length: int, weighting: StepWeighting) -> Poly:
    """Sum of path_weight over every 2-Motzkin path of the given length,
    via the transfer recurrence."""
    if length < 0:
        raise ValueError("path length must be nonnegative")
    level = weighting[TwoMotzkinStep.STRAIGHT] + weighting[TwoMotzkinStep.WAVY]
    return _walk_total(length, weighting[TwoMotzkinStep.UP], level,
                       weighting[TwoMotzkinStep.DOWN])


def total_path_weight_enumerated(length: int, weighting: StepWeighting) -> Poly:
    """Enumeration oracle for total_path_weight."""
    acc = ZERO
    for path in two_motzkin_paths(length):
        acc = acc + path_weight(path, weighting)
    return acc


def total_motzkin_weight(length: int, weighting: MotzkinWeighting) -> Poly:
    """Sum of motzkin_path_weight over every Motzkin path of the length."""
    if length < 0:
        raise ValueError("path length must be nonnegative")
    return _walk_total(length, weighting[MotzkinStep.UP],
                       weighting[MotzkinStep.LEVEL],
                       weighting[MotzkinStep.DOWN])


def total_motzkin_weight_enumerated(length: int,
                                    weighting: MotzkinWeighting) -> Poly:
    """Enumeration oracle for total_motzkin_weight."""
    acc = ZERO
    for path in motzkin_paths(length):
        acc = acc + motzkin_path_weight(path, weighting)
    return acc


def merge_levels(weighting: StepWeighting) -> MotzkinWeighting:
    """Collapse the two level kinds into one carrying the sum of their
    weights; up and down are unchanged. Totals are preserved because each
    level position distributes over the straight/wavy choice."""
    return MotzkinWeighting({
        MotzkinStep.UP: weighting[TwoMotzkinStep.UP],
        MotzkinStep.DOWN: weighting[TwoMotzkinStep.DOWN],
        MotzkinStep.LEVEL: (weighting[TwoMotzkinStep.STRAIGHT]
                            + weighting[TwoMotzkinStep.WAVY]),
    })


def rebalance_up_down(weighting: StepWeighting, new_up: Poly,
                      new_down: Poly) -> StepWeighting:
    """Replace the up/down weight pair by another pair with the same
    product. Every path has equally many up and down steps, so only the
    product matters to any path weight; the pair itself is free."""
    old = weighting[TwoMotzkinStep.UP] * weighting[TwoMotzkinStep.DOWN]
    if new_up * new_down != old:
        raise ProductMismatch(
            f"({new_up}) * ({new_down}) != ({old}); rebalancing must keep "
            "the up*down product")
    return StepWeighting({
        TwoMotzkinStep.UP: new_up,
        TwoMotzkinStep.DOWN: new_down,
        TwoMotzkinStep.STRAIGHT: weighting[TwoMotzkinStep.STRAIGHT],
        TwoMotzkinStep.WAVY: weighting[TwoMotzkinStep.WAVY],
    })


_STEP_BY_KEY = {
    "Up": TwoMotzkinStep.UP,
    "Down": TwoMotzkinStep.DOWN,
    "StraightLevel": TwoMotzkinStep.STRAIGHT,
    "WavyLevel": TwoMotzkinStep.WAVY,
}

_CATEGORY_BY_KEY = {category.value: category for category in EdgeCategory}


def step_weighting_from_json(mapping: Mapping[str, str]) -> StepWeighting:
    """Build a step weighting from JSON keys Up/Down/StraightLevel/WavyLevel
    with polynomial text values."""
    weights = {}
    for key, text in mapping.items():
        if key not in _STEP_BY_KEY:
            raise ValueError(f"unknown step key {key!r}")
        weights[_STEP_BY_KEY[key]] = parse_poly(text)
    return StepWeighting(weights)


def motzkin_weighting_from_json(mapping: Mapping[str, str]) -> MotzkinWeighting:
    """Accepts Up/Down/Level keys, or 2-Motzkin keys which are then merged."""
    if "Level" in mapping:
        keys = {"Up": MotzkinStep.UP, "Down": MotzkinStep.DOWN,
                "Level": MotzkinStep.LEVEL}
        weights = {}
        for key, text in mapping.items():
            if key not in keys:
                raise ValueError(f"unknown Motzkin step key {key!r}")
            weights[keys[key]] = parse_poly(text)
        return MotzkinWeighting(weights)
    return merge_levels(step_weighting_from_json(mapping))


def edge_weighting_from_json(mapping: Mapping[str, str]) -> EdgeWeighting:
    """Build an edge weighting from JSON keyed by category name."""
    weights = {}
    for key, text in mapping.items():
        if key not in _CATEGORY_BY_KEY:
            raise ValueError(f"unknown edge category {key!r}")
        weights[_CATEGORY_BY_KEY[key]] = parse_poly(text)
    return EdgeWeighting(weights)
