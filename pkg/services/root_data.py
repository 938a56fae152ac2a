"""Dynkin diagrams, orientations, Euler form and Coxeter transformation."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Sequence, Tuple

from constants import Families
from errors import InvalidInputError
from messages import ErrorMessages
from models.dynkin import DynkinDiagram, QuiverOrientation
from models.matrix import IntMatrix, Vector

COXETER_NUMBERS_E = {6: 12, 7: 18, 8: 30}


def dynkin_diagram(family: str, rank: int) -> DynkinDiagram:
    """Validated diagram; raises InvalidInputError naming the violated rank bound."""
    return DynkinDiagram(family=str(family).upper(), rank=int(rank))


def coxeter_number(diagram: DynkinDiagram) -> int:
    """h = n + 1 for A_n, 2n - 2 for D_n and 12, 18, 30 for E_6, E_7, E_8."""
    if diagram.family == Families.A:
        return diagram.rank + 1
    if diagram.family == Families.D:
        return 2 * (diagram.rank - 1)
    return COXETER_NUMBERS_E[diagram.rank]


def default_orientation(diagram: DynkinDiagram) -> QuiverOrientation:
    """Every edge points toward the higher label.

    For A_n this is 1 -> 2 -> ... -> n. For D_n both branch arrows leave n-2, which for D_4
    gives 1 -> 2, 2 -> 3, 2 -> 4. For E_m the branch arrow is 3 -> 4.
    """
    return QuiverOrientation(diagram=diagram, arrows=tuple(diagram.edges))


def _check_vector(orientation: QuiverOrientation, vector: Sequence[int]) -> None:
    if len(vector) != len(orientation.vertices):
        raise InvalidInputError(
            ErrorMessages.DIMENSION_MISMATCH.format(expected=len(orientation.vertices), got=len(vector))
        )


def euler_form(orientation: QuiverOrientation, x: Sequence[int], y: Sequence[int]) -> int:
    """<x, y> = sum_i x_i y_i - sum_{i -> j} x_i y_j."""
    _check_vector(orientation, x)
    _check_vector(orientation, y)
    value = sum(a * b for a, b in zip(x, y))
    return value - sum(x[s - 1] * y[t - 1] for s, t in orientation.arrows)


@lru_cache(maxsize=None)
def euler_matrix(orientation: QuiverOrientation) -> IntMatrix:
    """E with <x, y> = x^T E y."""
    n = len(orientation.vertices)
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for s, t in orientation.arrows:
        rows[s - 1][t - 1] -= 1
    return IntMatrix(tuple(tuple(r) for r in rows))


def _path_counts(orientation: QuiverOrientation) -> Dict[int, Dict[int, int]]:
    """paths[i][j] = number of paths i ~> j, trivial path included."""
    paths: Dict[int, Dict[int, int]] = {}
    for i in reversed(orientation.topological_order):
        counts = {j: 0 for j in orientation.vertices}
        counts[i] = 1
        for k in orientation.successors[i]:
            for j, c in paths[k].items():
                counts[j] += c
        paths[i] = counts
    return paths


@lru_cache(maxsize=None)
def projective_dimension_vectors(orientation: QuiverOrientation) -> Dict[int, Vector]:
    """dim P_i: P_i is spanned by the paths starting at i."""
    paths = _path_counts(orientation)
    return {i: tuple(paths[i][j] for j in orientation.vertices) for i in orientation.vertices}


@lru_cache(maxsize=None)
def injective_dimension_vectors(orientation: QuiverOrientation) -> Dict[int, Vector]:
    """dim I_i: I_i is dual to the paths ending at i."""
    paths = _path_counts(orientation)
    return {i: tuple(paths[j][i] for j in orientation.vertices) for i in orientation.vertices}


def simple_dimension_vector(orientation: QuiverOrientation, vertex: int) -> Vector:
    """Dimension vector of the simple module at vertex."""
    return tuple(int(v == vertex) for v in orientation.vertices)


@lru_cache(maxsize=None)
def coxeter_matrix(orientation: QuiverOrientation) -> IntMatrix:
    """Phi = -C^T C^{-1} with C the matrix whose columns are dim P_i.

    Phi sends dim P_i to -dim I_i and dim M to dim tau(M) for every non-projective
    indecomposable M.
    """
    projectives = projective_dimension_vectors(orientation)
    cartan = IntMatrix.from_columns([projectives[i] for i in orientation.vertices])
    return -(cartan.transpose @ cartan.inverse())


def coxeter_order(orientation: QuiverOrientation) -> int:
    """Smallest r > 0 with Phi^r = Id."""
    phi = coxeter_matrix(orientation)
    power = phi
    for r in range(1, 10 * len(orientation.vertices) + 40):
        if power.is_identity():
            return r
        power = power @ phi
    raise InvalidInputError(ErrorMessages.NOT_DYNKIN)


def diagram_automorphisms(diagram: DynkinDiagram) -> Tuple[Dict[int, int], ...]:
    """Non-trivial label swaps used for equivariance checks (the D_n branch swap)."""
    if diagram.family == Families.D:
        n = diagram.rank
        swap = {v: v for v in diagram.vertices}
        swap[n - 1], swap[n] = n, n - 1
        return (swap,)
    return ()
