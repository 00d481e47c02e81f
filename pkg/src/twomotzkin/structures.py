"""Plane trees, the four lattice path families, and their text encodings.

Encodings used everywhere (CLI, JSON, golden files):

* plane tree: balanced parentheses, one matched pair per edge, nesting for
  parent/child, left-to-right for sibling order; the 0-edge tree is ``""``
* 2-Motzkin path: one letter per step, U up, D down, S straight level,
  W wavy level
* Motzkin path: letters U, D, L
* Dyck path: letters U, D
* multiple Dyck path: whitespace-separated runs like ``U2 D1 D1``
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class ParseError(ValueError):
    """Bad input text; `position` is the offending character index."""

    def __init__(self, message: str, position: int):
        self.message = message
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnbalancedParentheses(ParseError):
    pass


class IllegalCharacter(ParseError):
    pass


class NegativePrefix(ParseError):
    pass


class NotClosed(ParseError):
    pass


class EmptyTree(ValueError):
    """A zero-edge tree was passed where at least one edge is required."""


class EdgeCategory(Enum):
    NON_TERMINAL_INTERIOR = "NonTerminalInterior"
    NON_TERMINAL_EXTERIOR = "NonTerminalExterior"
    TERMINAL_INTERIOR = "TerminalInterior"
    TERMINAL_EXTERIOR = "TerminalExterior"
    CRITICAL = "Critical"


class _LatticeStep(Enum):
    @property
    def rise(self) -> int:
        return 1 if self.value == "U" else -1 if self.value == "D" else 0


class TwoMotzkinStep(_LatticeStep):
    UP = "U"
    DOWN = "D"
    STRAIGHT = "S"
    WAVY = "W"


class MotzkinStep(_LatticeStep):
    UP = "U"
    DOWN = "D"
    LEVEL = "L"


class DyckStep(_LatticeStep):
    UP = "U"
    DOWN = "D"


@dataclass(frozen=True)
class PlaneTree:
    """A rooted ordered tree, given by the tuple of its child subtrees."""

    children: tuple["PlaneTree", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    def edge_count(self) -> int:
        return sum(1 + child.edge_count() for child in self.children)

    def leaf_count(self) -> int:
        """Vertices with no children; the bare root counts only when alone."""
        if not self.children:
            return 1
        return sum(child.leaf_count() for child in self.children)

    def encode(self) -> str:
        return "".join(f"({child.encode()})" for child in self.children)


def _validate_walk(rises, label: str) -> None:
    height = 0
    index = -1
    for index, rise in enumerate(rises):
        height += rise
        if height < 0:
            raise NegativePrefix(f"{label} dips below the axis", index)
    if height != 0:
        raise NotClosed(f"{label} ends at height {height}, not on the axis",
                        index + 1)


@dataclass(frozen=True)
class TwoMotzkinPath:
    """Steps over U/D/S/W with nonnegative prefixes, ending on the axis."""

    steps: tuple[TwoMotzkinStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        _validate_walk((s.rise for s in self.steps), "2-Motzkin path")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def encode(self) -> str:
        return "".join(step.value for step in self.steps)


@dataclass(frozen=True)
class MotzkinPath:
    """Steps over U/D/L with nonnegative prefixes, ending on the axis."""

    steps: tuple[MotzkinStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        _validate_walk((s.rise for s in self.steps), "Motzkin path")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def encode(self) -> str:
        return "".join(step.value for step in self.steps)


@dataclass(frozen=True)
class DyckPath:
    """Steps over U/D with nonnegative prefixes, ending on the axis."""

    steps: tuple[DyckStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        _validate_walk((s.rise for s in self.steps), "Dyck path")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def encode(self) -> str:
        return "".join(step.value for step in self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


@dataclass(frozen=True)
class MultipleDyckPath:
    """A Dyck path whose same-direction steps are grouped into ordered runs.

    Two adjacent runs may share a direction: ``U1 U1`` and ``U2`` are
    different objects even though they flatten to the same Dyck word.
    """

    runs: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        runs = tuple((direction, int(magnitude))
                     for direction, magnitude in self.runs)
        object.__setattr__(self, "runs", runs)
        height = 0
        for index, (direction, magnitude) in enumerate(runs):
            if direction not in ("U", "D"):
                raise ValueError(f"run direction must be 'U' or 'D', got {direction!r}")
            if magnitude < 1:
                raise ValueError("run magnitude must be at least 1")
            height += magnitude if direction == "U" else -magnitude
            if height < 0:
                raise NegativePrefix("multiple Dyck path dips below the axis", index)
        if height != 0:
            raise NotClosed(f"multiple Dyck path ends at height {height}, "
                            "not on the axis", len(runs))

    @property
    def semilength(self) -> int:
        return sum(m for d, m in self.runs if d == "U")

    @property
    def run_count(self) -> int:
        return len(self.runs)

    def encode(self) -> str:
        return " ".join(f"{d}{m}" for d, m in self.runs)


def parse_tree(text: str) -> PlaneTree:
    """Inverse of PlaneTree.encode."""
    stack: list[list[PlaneTree]] = [[]]
    open_positions: list[int] = []
    for index, char in enumerate(text):
        if char == "(":
            stack.append([])
            open_positions.append(index)
        elif char == ")":
            if len(stack) == 1:
                raise UnbalancedParentheses("unmatched ')'", index)
            children = stack.pop()
            open_positions.pop()
            stack[-1].append(PlaneTree(tuple(children)))
        else:
            raise IllegalCharacter(f"illegal character {char!r}", index)
    if open_positions:
        raise UnbalancedParentheses("unclosed '('", open_positions[0])
    return PlaneTree(tuple(stack[0]))


_LETTER_KINDS = {
    "2motzkin": (TwoMotzkinPath, TwoMotzkinStep),
    "motzkin": (MotzkinPath, MotzkinStep),
    "dyck": (DyckPath, DyckStep),
}

_RUN_TOKEN = re.compile(r"([UD])([1-9][0-9]*)\Z")


def _parse_multiple_dyck(text: str) -> MultipleDyckPath:
    runs: list[tuple[str, int]] = []
    starts: list[int] = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        parsed = _RUN_TOKEN.match(token)
        if not parsed:
            raise IllegalCharacter(f"illegal run token {token!r}", match.start())
        runs.append((parsed.group(1), int(parsed.group(2))))
        starts.append(match.start())
    try:
        return MultipleDyckPath(tuple(runs))
    except NegativePrefix as exc:
        raise NegativePrefix(exc.message, starts[exc.position]) from None
    except NotClosed as exc:
        raise NotClosed(exc.message, len(text)) from None


def parse_path(text: str, kind: str):
    """Parse a path encoding; `kind` is 2motzkin, motzkin, dyck, or mdyck."""
    if kind == "mdyck":
        return _parse_multiple_dyck(text)
    try:
        path_cls, step_enum = _LETTER_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown path kind {kind!r}") from None
    steps = []
    for index, char in enumerate(text):
        try:
            steps.append(step_enum(char))
        except ValueError:
            raise IllegalCharacter(
                f"illegal character {char!r} for a {kind} path", index) from None
    return path_cls(tuple(steps))
