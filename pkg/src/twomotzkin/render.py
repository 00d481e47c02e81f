"""ASCII drawings for the terminal and matplotlib figures for files.

ASCII output is byte-deterministic so it can be golden-file tested; the
figure helpers write static files (format chosen by the file extension,
e.g. .svg or .png) and are only imported lazily into matplotlib.
"""

from __future__ import annotations

import math

from .bijection import classify_edges
from .structures import EdgeCategory, PlaneTree

_GLYPHS = {"U": "/", "D": "\\", "S": "-", "W": "~", "L": "-"}

_CATEGORY_COLORS = {
    EdgeCategory.NON_TERMINAL_INTERIOR: "tab:blue",
    EdgeCategory.NON_TERMINAL_EXTERIOR: "tab:green",
    EdgeCategory.TERMINAL_INTERIOR: "tab:orange",
    EdgeCategory.TERMINAL_EXTERIOR: "tab:red",
    EdgeCategory.CRITICAL: "black",
}


def tree_ascii(tree: PlaneTree) -> str:
    """Indented preorder listing; a backquote connector marks last children."""
    lines = ["*"]

    def walk(vertex: PlaneTree, prefix: str) -> None:
        last = len(vertex.children) - 1
        for i, child in enumerate(vertex.children):
            connector = "`- " if i == last else "|- "
            lines.append(prefix + connector + "*")
            walk(child, prefix + ("   " if i == last else "|  "))

    walk(tree, "")
    return "\n".join(lines)


def path_ascii(path) -> str:
    """Height profile, one column per step: / up, \\ down, - straight or
    plain level, ~ wavy level."""
    steps = list(path)
    if not steps:
        return ""
    heights = [0]
    for step in steps:
        heights.append(heights[-1] + step.rise)
    rows: dict[int, list[str]] = {}
    for column, step in enumerate(steps):
        start = heights[column]
        row = start - 1 if step.value == "D" else start
        rows.setdefault(row, [" "] * len(steps))[column] = _GLYPHS[step.value]
    top = max(rows)
    lines = []
    for row in range(top, -1, -1):
        cells = rows.get(row, [" "] * len(steps))
        lines.append("".join(cells).rstrip())
    return "\n".join(lines)


def _tree_layout(tree: PlaneTree):
    """Positions: leaves at consecutive x, parents centered, y = -depth."""
    positions: dict[int, tuple[float, int]] = {}
    next_slot = [0.0]

    def place(vertex: PlaneTree, depth: int) -> float:
        if not vertex.children:
            x = next_slot[0]
            next_slot[0] += 1.0
        else:
            xs = [place(child, depth + 1) for child in vertex.children]
            x = sum(xs) / len(xs)
        positions[id(vertex)] = (x, -depth)
        return x

    place(tree, 0)
    return positions


def save_tree_figure(tree: PlaneTree, out_file: str) -> None:
    """Draw the tree with edges colored by their five-way category."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    positions = _tree_layout(tree)
    fig, ax = plt.subplots(figsize=(4.5, 3.2))
    if tree.children:
        edges = []

        def collect(vertex: PlaneTree) -> None:
            for child in vertex.children:
                edges.append((vertex, child))
                collect(child)

        collect(tree)
        seen = set()
        for (parent, child), category in zip(edges, classify_edges(tree)):
            px, py = positions[id(parent)]
            cx, cy = positions[id(child)]
            label = category.value if category not in seen else None
            seen.add(category)
            ax.plot([px, cx], [py, cy], color=_CATEGORY_COLORS[category],
                    linewidth=2.0, label=label, zorder=1)
        ax.legend(fontsize=7, loc="best")
    xs = [p[0] for p in positions.values()]
    ys = [p[1] for p in positions.values()]
    ax.scatter(xs, ys, s=28, color="black", zorder=2)
    ax.set_axis_off()
    fig.savefig(out_file, bbox_inches="tight")
    plt.close(fig)


def save_path_figure(path, out_file: str) -> None:
    """Draw the height profile with wavy level steps as squiggles."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(4.5, 2.6))
    height = 0
    for column, step in enumerate(path):
        nxt = height + step.rise
        if step.value == "W":
            xs = [column + t / 24 for t in range(25)]
            ys = [height + 0.1 * math.sin(2 * math.pi * 3 * t / 24)
                  for t in range(25)]
            ax.plot(xs, ys, color="tab:orange", linewidth=1.6)
        else:
            color = {"U": "black", "D": "black"}.get(step.value, "tab:blue")
            ax.plot([column, column + 1], [height, nxt], color=color,
                    linewidth=1.6)
        ax.plot([column], [height], "ko", markersize=3)
        height = nxt
    length = len(list(path))
    ax.plot([length], [height], "ko", markersize=3)
    ax.axhline(0, color="gray", linewidth=0.6, zorder=0)
    ax.set_yticks(range(0, max(2, length // 2 + 1)))
    ax.set_xticks(range(length + 1))
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.savefig(out_file, bbox_inches="tight")
    plt.close(fig)


def save_sequence_figure(pairs, out_file: str, *, title: str,
                         xlabel: str = "n", ylabel: str = "count") -> None:
    """Plot an integer sequence, log-scale when it spans magnitudes."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    ax.plot(xs, ys, "o-", color="tab:blue")
    if ys and min(ys) > 0 and max(ys) > 50 * max(1, min(ys)):
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.savefig(out_file, bbox_inches="tight")
    plt.close(fig)


def save_bar_figure(table: dict[int, int], out_file: str, *, title: str,
                    xlabel: str, ylabel: str = "count") -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    keys = sorted(table)
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    ax.bar(keys, [table[k] for k in keys], color="tab:blue")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.set_xticks(keys)
    fig.savefig(out_file, bbox_inches="tight")
    plt.close(fig)
