"""Exact rank computations over the rationals."""

from typing import Dict, List, Sequence

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

SparseRow = Dict[int, int]


def rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Rank over QQ of an integer matrix given as dense rows."""
    if not rows or ncols == 0:
        return 0
    matrix = DomainMatrix([[ZZ(int(c)) for c in row] for row in rows], (len(rows), ncols), ZZ)
    return int(matrix.convert_to(QQ).rank())


def sparse_rank(rows: List[SparseRow], ncols: int) -> int:
    """Rank of a matrix whose rows map column index to a nonzero coefficient."""
    dense = [[row.get(col, 0) for col in range(ncols)] for row in rows if row]
    return rank(dense, ncols)


def nullity(rows: List[SparseRow], ncols: int) -> int:
    return ncols - sparse_rank(rows, ncols)
