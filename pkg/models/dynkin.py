from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Tuple

from constants import Families
from errors import InvalidInputError
from messages import ErrorMessages

Arrow = Tuple[int, int]


@dataclass(frozen=True)
class DynkinDiagram:
    """A simply laced Dynkin diagram A_n, D_n or E_m, vertices numbered 1..rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in Families.ALL:
            raise InvalidInputError(ErrorMessages.UNKNOWN_FAMILY.format(family=self.family))
        low = Families.MIN_RANK[self.family]
        high = Families.MAX_RANK.get(self.family)
        if self.rank < low or (high is not None and self.rank > high):
            bound = f"{low} <= rank <= {high}" if high is not None else f"rank >= {low}"
            raise InvalidInputError(
                ErrorMessages.RANK_OUT_OF_RANGE.format(family=self.family, rank=self.rank, bound=bound)
            )

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @cached_property
    def edges(self) -> Tuple[Arrow, ...]:
        """Undirected edges as sorted pairs, following the vertex labels of the D_n and E_m figures."""
        n = self.rank
        if self.family == Families.A:
            pairs = [(i, i + 1) for i in range(1, n)]
        elif self.family == Families.D:
            pairs = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        else:
            # vertex 4 hangs off vertex 3; the long arm runs 3-5-6-...-m
            pairs = [(1, 2), (2, 3), (3, 4), (3, 5)] + [(i, i + 1) for i in range(5, n)]
        return tuple(sorted(pairs))

    def to_dict(self) -> Dict:
        return {"family": self.family, "rank": self.rank}

    @staticmethod
    def from_dict(data: Dict) -> "DynkinDiagram":
        return DynkinDiagram(family=str(data["family"]), rank=int(data["rank"]))


@dataclass(frozen=True)
class QuiverOrientation:
    """An orientation of a Dynkin diagram: one arrow (source, target) per edge."""

    diagram: DynkinDiagram
    arrows: Tuple[Arrow, ...]

    def __post_init__(self) -> None:
        undirected = sorted(tuple(sorted(a)) for a in self.arrows)
        if undirected != list(self.diagram.edges):
            raise InvalidInputError(
                ErrorMessages.ORIENTATION_MISMATCH.format(diagram=self.diagram.name, arrows=list(self.arrows))
            )

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self.diagram.vertices

    @cached_property
    def successors(self) -> Dict[int, Tuple[int, ...]]:
        return {v: tuple(sorted(t for s, t in self.arrows if s == v)) for v in self.vertices}

    @cached_property
    def predecessors(self) -> Dict[int, Tuple[int, ...]]:
        return {v: tuple(sorted(s for s, t in self.arrows if t == v)) for v in self.vertices}

    @cached_property
    def topological_order(self) -> Tuple[int, ...]:
        """Vertices with every arrow pointing forward; ties broken by label."""
        indegree = {v: len(self.predecessors[v]) for v in self.vertices}
        ready = sorted(v for v, deg in indegree.items() if deg == 0)
        order: list[int] = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in self.successors[v]:
                indegree[w] -= 1
                if indegree[w] == 0:
                    ready.append(w)
                    ready.sort()
        return tuple(order)

    @cached_property
    def depth(self) -> Dict[int, int]:
        """Horizontal offset of each vertex inside a slice of ZQ: depth(s) = depth(t) + 1 for s -> t."""
        depth = {self.vertices[0]: 0}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for w in self.successors[v]:
                if w not in depth:
                    depth[w] = depth[v] - 1
                    frontier.append(w)
            for u in self.predecessors[v]:
                if u not in depth:
                    depth[u] = depth[v] + 1
                    frontier.append(u)
        low = min(depth.values())
        return {v: depth[v] - low for v in self.vertices}

    def relabel(self, mapping: Dict[int, int]) -> "QuiverOrientation":
        """The same quiver with vertices renamed; mapping must be a diagram automorphism."""
        arrows = tuple(sorted((mapping[s], mapping[t]) for s, t in self.arrows))
        return QuiverOrientation(diagram=self.diagram, arrows=arrows)

    def to_dict(self) -> Dict:
        return {"diagram": self.diagram.to_dict(), "arrows": [list(a) for a in self.arrows]}

    @staticmethod
    def from_dict(data: Dict) -> "QuiverOrientation":
        return QuiverOrientation(
            diagram=DynkinDiagram.from_dict(data["diagram"]),
            arrows=tuple((int(s), int(t)) for s, t in data["arrows"]),
        )
