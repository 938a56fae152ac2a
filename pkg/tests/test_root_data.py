import networkx as nx
import numpy as np
import pytest

from errors import InvalidInputError
from models.dynkin import QuiverOrientation
from services.root_data import (
    coxeter_matrix,
    coxeter_number,
    coxeter_order,
    default_orientation,
    dynkin_diagram,
    euler_form,
    injective_dimension_vectors,
    projective_dimension_vectors,
)


@pytest.mark.parametrize(
    "family, rank, h",
    [("A", 1, 2), ("A", 6, 7), ("D", 4, 6), ("D", 7, 12), ("E", 6, 12), ("E", 7, 18), ("E", 8, 30)],
)
def test_coxeter_number(family, rank, h):
    assert coxeter_number(dynkin_diagram(family, rank)) == h


@pytest.mark.parametrize("family, rank", [("D", 3), ("E", 5), ("E", 9), ("A", 0), ("B", 3)])
def test_invalid_diagrams_rejected(family, rank):
    with pytest.raises(InvalidInputError):
        dynkin_diagram(family, rank)


def test_lowercase_family_accepted():
    assert dynkin_diagram("d", 5).name == "D5"


def test_edges():
    assert dynkin_diagram("D", 4).edges == ((1, 2), (2, 3), (2, 4))
    assert dynkin_diagram("E", 6).edges == ((1, 2), (2, 3), (3, 4), (3, 5), (5, 6))


def test_orientation_must_cover_edges():
    with pytest.raises(InvalidInputError):
        QuiverOrientation(dynkin_diagram("A", 3), ((1, 2), (1, 3)))


def test_projectives_and_injectives_of_a3(a3):
    assert projective_dimension_vectors(a3) == {1: (1, 1, 1), 2: (0, 1, 1), 3: (0, 0, 1)}
    assert injective_dimension_vectors(a3) == {1: (1, 0, 0), 2: (1, 1, 0), 3: (1, 1, 1)}


def test_euler_form(a2):
    assert euler_form(a2, (1, 0), (0, 1)) == -1
    assert euler_form(a2, (0, 1), (1, 0)) == 0
    assert euler_form(a2, (1, 1), (1, 1)) == 1


def test_euler_form_rejects_wrong_length(a2):
    with pytest.raises(InvalidInputError):
        euler_form(a2, (1, 0, 0), (0, 1))


def test_coxeter_sends_simple_injective_to_simple_projective(a2):
    # S_1 = I_1 and tau(S_1) = S_2 = P_2
    assert coxeter_matrix(a2).apply((1, 0)) == (0, 1)


def test_coxeter_sends_projectives_to_negative_injectives(d4):
    phi = coxeter_matrix(d4)
    injectives = injective_dimension_vectors(d4)
    for i, dim in projective_dimension_vectors(d4).items():
        assert phi.apply(dim) == tuple(-x for x in injectives[i])


@pytest.mark.parametrize("family, rank", [("A", 3), ("A", 5), ("D", 4), ("D", 5), ("E", 6)])
def test_coxeter_order_is_coxeter_number(family, rank):
    diagram = dynkin_diagram(family, rank)
    assert coxeter_order(default_orientation(diagram)) == coxeter_number(diagram)


ALL_TYPES = [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)] + [("E", n) for n in (6, 7, 8)]


@pytest.mark.parametrize("family, rank", ALL_TYPES)
def test_coxeter_order_on_every_type(family, rank):
    diagram = dynkin_diagram(family, rank)
    phi = coxeter_matrix(default_orientation(diagram))
    h = coxeter_number(diagram)
    assert phi.power(h).is_identity()
    assert not any(phi.power(r).is_identity() for r in range(1, h))


@pytest.mark.parametrize("family, rank", ALL_TYPES)
def test_coxeter_transformation_twists_the_euler_form(family, rank):
    orientation = default_orientation(dynkin_diagram(family, rank))
    phi = coxeter_matrix(orientation)
    rng = np.random.default_rng(rank)
    for _ in range(20):
        x = tuple(int(v) for v in rng.integers(-3, 4, size=rank))
        y = tuple(int(v) for v in rng.integers(-3, 4, size=rank))
        assert euler_form(orientation, x, phi.apply(y)) == -euler_form(orientation, y, x)


@pytest.mark.parametrize("family, rank", ALL_TYPES)
def test_default_orientation_is_a_connected_acyclic_quiver(family, rank):
    orientation = default_orientation(dynkin_diagram(family, rank))
    graph = nx.DiGraph()
    graph.add_nodes_from(orientation.vertices)
    graph.add_edges_from(orientation.arrows)
    assert nx.is_directed_acyclic_graph(graph)
    assert nx.is_tree(graph.to_undirected())
    assert sorted(orientation.topological_order) == list(orientation.vertices)
