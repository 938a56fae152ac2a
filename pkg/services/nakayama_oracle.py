"""Hom spaces between serial modules by exact linear algebra.

A module M(i, l) is realized with basis b_0, ..., b_{l-1}, b_t sitting at vertex i + t
(mod n); the arrow out of that vertex sends b_t to b_{t+1} (and b_{l-1} to 0). A
homomorphism M -> N is a family of matrices F_v commuting with every arrow; its
entries are the unknowns x[p, q] with b_p in N and b_q in M at the same vertex.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Tuple

from errors import RouteMismatchError
from messages import ErrorMessages
from models.serial import NakayamaAlgebra, SerialModule
from utils.linalg import SparseRow, nullity, sparse_rank

logger = logging.getLogger(__name__)

Unknown = Tuple[int, int]


class MatrixOracle:
    def __init__(self, algebra: NakayamaAlgebra) -> None:
        self.algebra = algebra
        self.n = algebra.n

    def _vertex(self, module: SerialModule, index: int) -> int:
        return (module.top + index) % self.n

    def unknowns(self, m: SerialModule, n: SerialModule) -> Dict[Unknown, int]:
        """Column index of every entry x[p, q] with b_p in N and b_q in M at one vertex."""
        columns: Dict[Unknown, int] = {}
        for p in range(n.length):
            for q in range(m.length):
                if self._vertex(n, p) == self._vertex(m, q):
                    columns[(p, q)] = len(columns)
        return columns

    def equations(self, m: SerialModule, n: SerialModule, columns: Dict[Unknown, int]) -> List[SparseRow]:
        """F_w M_alpha = N_alpha F_v for the arrow alpha: v -> w, entry (p, q)."""
        rows: List[SparseRow] = []
        for p in range(n.length):
            for q in range(m.length):
                if self._vertex(n, p) != (self._vertex(m, q) + 1) % self.n:
                    continue
                row: SparseRow = {}
                if q + 1 < m.length:
                    col = columns[(p, q + 1)]
                    row[col] = row.get(col, 0) + 1
                if p >= 1:
                    col = columns[(p - 1, q)]
                    row[col] = row.get(col, 0) - 1
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
        return rows

    def hom_dim(self, m: SerialModule, n: SerialModule) -> int:
        columns = self.unknowns(m, n)
        return nullity(self.equations(m, n, columns), len(columns))

    def _cover(self, n: SerialModule) -> SerialModule:
        return self.algebra.projective(n.top)

    def factor_rank_by_kernel(self, m: SerialModule, n: SerialModule) -> int:
        """dim Hom(M, P(N)) - dim Hom(M, Omega N): the image of Hom(M, P(N)) -> Hom(M, N)."""
        if self.algebra.is_projective(n):
            return self.hom_dim(m, n)
        syzygy = SerialModule((n.top + n.length) % self.n, self.algebra.loewy_length - n.length)
        return self.hom_dim(m, self._cover(n)) - self.hom_dim(m, syzygy)

    def factor_rank_by_image(self, m: SerialModule, n: SerialModule) -> int:
        """Rank of G -> pi o G on the solution space of Hom(M, P(N)).

        pi: P(N) -> N keeps b_k for k < len N, so pi o G vanishes exactly when the
        unknowns with p < len N do.
        """
        cover = self._cover(n)
        columns = self.unknowns(m, cover)
        system = self.equations(m, cover, columns)
        projection = [{col: 1} for (p, _), col in columns.items() if p < n.length]
        return sparse_rank(system + projection, len(columns)) - sparse_rank(system, len(columns))

    def stable_hom_dim(self, m: SerialModule, n: SerialModule) -> int:
        by_kernel = self.factor_rank_by_kernel(m, n)
        by_image = self.factor_rank_by_image(m, n)
        if by_kernel != by_image:
            raise RouteMismatchError(
                ErrorMessages.RANK_ROUTES_DISAGREE.format(m=m, n=n, kernel=by_kernel, image=by_image),
                witness={"pair": [m.to_list(), n.to_list()], "kernel": by_kernel, "image": by_image},
            )
        return self.hom_dim(m, n) - by_kernel
