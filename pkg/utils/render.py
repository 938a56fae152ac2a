"""Auslander-Reiten quiver drawings: DOT, ASCII and JSON.

Vertex (i, l) = tau^l(P_i) sits in row i at column 2(window - 1 - l) + depth(i), so
tau points left and every irreducible map points right.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Set, Tuple

from models.dynkin import QuiverOrientation

Point = Tuple[int, int]


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def _node_id(point: Point) -> str:
    return f"v{point[0]}_{point[1]}"


def _label(point: Point) -> str:
    return f"t^{point[1]}P{point[0]}"


class ARQuiverLayout:
    """The strip of ZQ with twists 0 .. window-1 and the marked objects in it."""

    def __init__(self, orientation: QuiverOrientation, window: int, marked: Iterable[Point] = ()) -> None:
        self.orientation = orientation
        self.window = window
        self.points: List[Point] = [(i, l) for i in orientation.vertices for l in range(window)]
        self.marked: Set[Point] = set(marked) & set(self.points)

    def column(self, point: Point) -> int:
        i, l = point
        return 2 * (self.window - 1 - l) + self.orientation.depth[i]

    def arrows(self) -> List[Tuple[Point, Point]]:
        edges = []
        for u, v in self.orientation.arrows:
            for l in range(self.window):
                edges.append(((v, l), (u, l)))
                if l >= 1:
                    edges.append(((u, l), (v, l - 1)))
        return sorted(edges)

    def tau_edges(self) -> List[Tuple[Point, Point]]:
        return [((i, l), (i, l + 1)) for i, l in self.points if l + 1 < self.window]


def to_dot(layout: ARQuiverLayout, title: str) -> str:
    """Deterministic DOT text: fixed node positions, dotted tau edges, marked nodes filled black."""
    lines = [f"digraph {_gvquote(title)} {{\n", "  rankdir=LR;\n", '  node [shape=plaintext fontname="Helvetica"];\n']
    for point in sorted(layout.points):
        attrs = f'label={_gvquote(_label(point))} pos="{layout.column(point)},{-point[0]}!"'
        if point in layout.marked:
            attrs += ' shape=circle style=filled fillcolor=black fontcolor=white'
        lines.append(f"  {_node_id(point)} [{attrs}];\n")
    for source, target in layout.arrows():
        lines.append(f"  {_node_id(source)} -> {_node_id(target)};\n")
    for source, target in layout.tau_edges():
        lines.append(f"  {_node_id(source)} -> {_node_id(target)} [style=dotted constraint=false];\n")
    lines.append("}\n")
    return "".join(lines)


def to_ascii(layout: ARQuiverLayout) -> str:
    """One text row per tau-orbit: '#' marked, 'o' unmarked."""
    width = max(layout.column(p) for p in layout.points) + 1
    grid: Dict[int, List[str]] = {i: [" "] * width for i in layout.orientation.vertices}
    for point in layout.points:
        grid[point[0]][layout.column(point)] = "#" if point in layout.marked else "o"
    return "".join(f"{i:>2} {''.join(grid[i]).rstrip()}\n" for i in layout.orientation.vertices)


def to_json_dict(layout: ARQuiverLayout) -> Dict:
    return {
        "orientation": layout.orientation.to_dict(),
        "window": layout.window,
        "nodes": [
            {
                "vertex": i,
                "twist": l,
                "x": layout.column((i, l)),
                "y": i,
                "marked": (i, l) in layout.marked,
            }
            for i, l in sorted(layout.points)
        ],
        "arrows": [[list(s), list(t)] for s, t in layout.arrows()],
        "tau": [[list(s), list(t)] for s, t in layout.tau_edges()],
    }
