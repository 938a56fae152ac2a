from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np
import sympy

from errors import InvalidInputError
from messages import ErrorMessages

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Square integer matrix indexed by quiver vertices (row/column v-1 for vertex v)."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise InvalidInputError(ErrorMessages.NOT_SQUARE.format(shape=[len(r) for r in self.rows]))

    @property
    def size(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(size: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]]) -> "IntMatrix":
        size = len(columns)
        return IntMatrix(tuple(tuple(int(columns[j][i]) for j in range(size)) for i in range(size)))

    @staticmethod
    def from_array(array: np.ndarray) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in array.tolist()))

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.size, self.size)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.rows) if self.size else sympy.zeros(0, 0)

    @property
    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.size else self

    def inverse(self) -> "IntMatrix":
        """Exact inverse; the result must again be integral."""
        inv = self.to_sympy().inv()
        if any(not entry.is_integer for entry in inv):
            raise InvalidInputError(ErrorMessages.NOT_UNIMODULAR)
        return IntMatrix(tuple(tuple(int(inv[i, j]) for j in range(self.size)) for i in range(self.size)))

    def apply(self, vector: Sequence[int]) -> Vector:
        if len(vector) != self.size:
            raise InvalidInputError(ErrorMessages.DIMENSION_MISMATCH.format(expected=self.size, got=len(vector)))
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix.from_array(self.to_array() @ other.to_array())

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.rows))

    def power(self, exponent: int) -> "IntMatrix":
        if exponent < 0:
            return self.inverse().power(-exponent)
        return IntMatrix.from_array(np.linalg.matrix_power(self.to_array(), exponent))

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.size)

    def to_dict(self) -> Dict:
        return {"rows": [list(row) for row in self.rows]}

    @staticmethod
    def from_dict(data: Dict) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in data["rows"]))
