"""Maximal clique enumeration on compatibility graphs."""

from typing import Callable, Hashable, Iterable, List, Sequence, TypeVar

import networkx as nx

Node = TypeVar("Node", bound=Hashable)


def compatibility_graph(
    nodes: Sequence[Node],
    compatible: Callable[[Node, Node], bool],
) -> nx.Graph:
    """Graph on the given nodes with an edge between every compatible pair."""
    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    for index, u in enumerate(nodes):
        for v in nodes[index + 1 :]:
            if compatible(u, v):
                graph.add_edge(u, v)
    return graph


def maximal_cliques(graph: nx.Graph) -> List[List[Node]]:
    """All maximal cliques, each sorted, listed in lexicographic order.

    Isolated nodes count as maximal cliques of size one.
    """
    if graph.number_of_nodes() == 0:
        return []
    cliques: Iterable[List[Node]] = nx.find_cliques(graph)
    return sorted(sorted(clique) for clique in cliques)
