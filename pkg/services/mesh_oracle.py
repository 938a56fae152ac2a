"""Hom dimensions in the mesh category of ZQ by knitting.

The stable translation quiver ZQ has vertices (i, l) = tau^l(P_i). Every arrow u -> v
of Q gives arrows (v, l) -> (u, l) and (u, l) -> (v, l - 1), and tau(i, l) = (i, l + 1).
Starting from X = (x, 0) the function f = dim Hom(X, -) is knitted slice by slice,
l = 0, -1, -2, ..., with f(Y) = max(0, sum of f over arrows into Y - f(tau Y)).
Nothing here touches dimension vectors or the Euler form.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from constants import WINDOW_FACTOR
from errors import WindowExceededError
from messages import ErrorMessages
from models.derived import DerivedObject
from models.dynkin import QuiverOrientation
from services.root_data import coxeter_number

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


class MeshOracle:
    def __init__(self, orientation: QuiverOrientation, window_factor: int = WINDOW_FACTOR) -> None:
        self.orientation = orientation
        self.h = coxeter_number(orientation.diagram)
        self.window = window_factor * self.h
        self._slice_order = tuple(reversed(orientation.topological_order))
        self._tables = {x: self._knit(x) for x in orientation.vertices}

    def _predecessors(self, y: int, l: int) -> List[Point]:
        same_slice = [(v, l) for v in self.orientation.successors[y]]
        previous_slice = [(u, l + 1) for u in self.orientation.predecessors[y]]
        return same_slice + previous_slice

    def _knit(self, x: int) -> Dict[Point, int]:
        values: Dict[Point, int] = {}
        for l in range(0, -self.window - 1, -1):
            for y in self._slice_order:
                if l == 0 and (x, 0) not in values:
                    # no path from X to objects knitted before it in its own slice
                    values[(y, 0)] = int(y == x)
                    continue
                total = sum(values.get(p, 0) for p in self._predecessors(y, l))
                values[(y, l)] = max(0, total - values.get((y, l + 1), 0))
        logger.debug("knitted Hom(P_%d, -) over %d slices", x, self.window + 1)
        return values

    def hom_dim(self, x: DerivedObject, y: DerivedObject) -> int:
        offset = y.twist - x.twist
        if abs(offset) > self.window:
            raise WindowExceededError(ErrorMessages.WINDOW_EXCEEDED.format(x=x, y=y, window=self.window))
        if offset > 0:
            return 0
        return self._tables[x.vertex][(y.vertex, offset)]


@lru_cache(maxsize=None)
def mesh_oracle(orientation: QuiverOrientation) -> MeshOracle:
    return MeshOracle(orientation)
