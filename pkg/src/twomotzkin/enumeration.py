"""Exhaustive, deterministic generators for every object family.

Single-word encodings (trees and letter paths) are produced in lexicographic
order of the encoding; multiple Dyck paths are produced as Dyck paths in
lexicographic order, each followed by all run refinements in composition
order. Generators are lazy, so e.g. all 208012 trees with 12 edges can be
streamed in constant memory per item.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator

from .structures import (DyckPath, DyckStep, MotzkinPath, MotzkinStep,
                         MultipleDyckPath, PlaneTree, TwoMotzkinPath,
                         TwoMotzkinStep, parse_tree)


def _balanced_words(pairs: int) -> Iterator[str]:
    # Trying '(' before ')' at every branch yields lexicographic order.
    def extend(prefix: str, opened: int, height: int) -> Iterator[str]:
        if len(prefix) == 2 * pairs:
            yield prefix
            return
        if opened < pairs:
            yield from extend(prefix + "(", opened + 1, height + 1)
        if height > 0:
            yield from extend(prefix + ")", opened, height - 1)

    yield from extend("", 0, 0)


def plane_trees(edge_count: int) -> Iterator[PlaneTree]:
    """All plane trees with `edge_count` edges, lexicographic by encoding."""
    if edge_count < 0:
        raise ValueError("edge count must be nonnegative")
    for word in _balanced_words(edge_count):
        yield parse_tree(word)


def _letter_paths(length: int, step_enum, path_cls) -> Iterator:
    if length < 0:
        raise ValueError("path length must be nonnegative")
    alphabet = sorted(step_enum, key=lambda step: step.value)

    def extend(prefix: list, height: int) -> Iterator:
        remaining = length - len(prefix)
        if remaining == 0:
            yield path_cls(tuple(prefix))
            return
        for step in alphabet:
            new_height = height + step.rise
            if 0 <= new_height <= remaining - 1:
                prefix.append(step)
                yield from extend(prefix, new_height)
                prefix.pop()

    yield from extend([], 0)


def two_motzkin_paths(length: int) -> Iterator[TwoMotzkinPath]:
    """All 2-Motzkin paths of the given length; their number is a Catalan
    number (C of length+1)."""
    return _letter_paths(length, TwoMotzkinStep, TwoMotzkinPath)


def motzkin_paths(length: int) -> Iterator[MotzkinPath]:
    return _letter_paths(length, MotzkinStep, MotzkinPath)


def dyck_paths(semilength: int) -> Iterator[DyckPath]:
    return _letter_paths(2 * semilength, DyckStep, DyckPath)


def _maximal_runs(path: DyckPath) -> list[tuple[str, int]]:
    runs: list[tuple[str, int]] = []
    for step in path:
        letter = step.value
        if runs and runs[-1][0] == letter:
            runs[-1] = (letter, runs[-1][1] + 1)
        else:
            runs.append((letter, 1))
    return runs


def _compositions(total: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(1, remaining + 1):
            prefix.append(part)
            extend(prefix, remaining - part)
            prefix.pop()

    extend([], total)
    return out


def multiple_dyck_paths(semilength: int) -> Iterator[MultipleDyckPath]:
    """Every refinement of every Dyck path's maximal runs into ordered
    compositions. Distinct refinements of the same Dyck word are distinct
    objects, which is why there are 5 of them at semilength 2, not 2."""
    for dyck in dyck_paths(semilength):
        maximal = _maximal_runs(dyck)
        choices = [_compositions(magnitude) for _, magnitude in maximal]
        for combo in itertools.product(*choices):
            runs = tuple((direction, part)
                         for (direction, _), parts in zip(maximal, combo)
                         for part in parts)
            yield MultipleDyckPath(runs)


FAMILIES = {
    "trees": plane_trees,
    "2motzkin": two_motzkin_paths,
    "motzkin": motzkin_paths,
    "dyck": dyck_paths,
    "mdyck": multiple_dyck_paths,
}


def objects(family: str, size: int) -> Iterator:
    try:
        generator = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return generator(size)


def count(family: str, size: int) -> int:
    """Length of the family's stream at the given size, by streaming it."""
    return sum(1 for _ in objects(family, size))
