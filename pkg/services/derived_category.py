"""Combinatorial model of the bounded derived category of a Dynkin path algebra.

Indecomposables are written tau^l(P_i) and stored as DerivedObject(i, l). Every
computation reduces to the normal form M[s] (an indecomposable module M shifted s
times) and the Euler form of the quiver.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from constants import VERIFY_WINDOW_FACTOR
from errors import InternalError, InvalidInputError
from messages import ErrorMessages
from models.derived import DerivedObject, ModuleForm, NakayamaPermutationData
from models.dynkin import QuiverOrientation
from models.matrix import IntMatrix, Vector
from services.root_data import (
    coxeter_matrix,
    coxeter_number,
    euler_matrix,
    injective_dimension_vectors,
    projective_dimension_vectors,
)

logger = logging.getLogger(__name__)


class DerivedCategory:
    """Functors and Hom dimensions on D^b(kQ) for one fixed orientation.

    All tables are built in the constructor; instances are read-only afterwards.
    """

    def __init__(self, orientation: QuiverOrientation) -> None:
        self.orientation = orientation
        self.h = coxeter_number(orientation.diagram)
        self.vertices = orientation.vertices
        self._phi: IntMatrix = coxeter_matrix(orientation)
        self._phi_inverse: IntMatrix = self._phi.inverse()
        self._euler: IntMatrix = euler_matrix(orientation)
        self._projectives: Dict[int, Vector] = projective_dimension_vectors(orientation)
        self._injectives: Dict[int, Vector] = injective_dimension_vectors(orientation)
        self._projective_at = {dim: i for i, dim in self._projectives.items()}
        self._injective_at = {dim: i for i, dim in self._injectives.items()}
        self._nakayama = self._locate_injectives()
        self._forms = self._module_forms()
        self._modules = self._module_index()
        logger.debug(
            "%s: h = %d, sigma = %s, offsets = %s",
            orientation.diagram.name,
            self.h,
            self._nakayama.sigma,
            self._nakayama.offsets,
        )

    # ------------------------------------------------------------------ tables

    def _locate_injectives(self) -> NakayamaPermutationData:
        sigma: Dict[int, int] = {}
        offsets: Dict[int, int] = {}
        for j in self.vertices:
            dim = self._projectives[j]
            for steps in range(self.h + 1):
                if dim in self._injective_at:
                    i = self._injective_at[dim]
                    sigma[i] = j
                    offsets[i] = steps
                    break
                dim = self._phi_inverse.apply(dim)
            else:
                raise InternalError(ErrorMessages.NO_INJECTIVE_REACHED.format(vertex=j, steps=self.h))
        return NakayamaPermutationData(
            sigma=tuple(sigma[i] for i in self.vertices),
            offsets=tuple(offsets[i] for i in self.vertices),
        )

    def _module_forms(self) -> Dict[Tuple[int, int], ModuleForm]:
        """Normal forms of tau^l(P_i) for 0 <= l < h, stepping tau one arrow at a time."""
        forms: Dict[Tuple[int, int], ModuleForm] = {}
        for i in self.vertices:
            dim, shift = self._projectives[i], 0
            for l in range(self.h):
                forms[(i, l)] = ModuleForm(dim, shift)
                if dim in self._projective_at:
                    dim, shift = self._injectives[self._projective_at[dim]], shift - 1
                else:
                    dim = self._phi.apply(dim)
            if (dim, shift) != (self._projectives[i], -2):
                raise InternalError(ErrorMessages.TAU_PERIOD_BROKEN.format(vertex=i, h=self.h))
        return forms

    def _module_index(self) -> Dict[Vector, DerivedObject]:
        """dim M -> coordinate of M for every indecomposable module M."""
        index: Dict[Vector, DerivedObject] = {}
        for j in self.vertices:
            dim, k = self._projectives[j], 0
            while True:
                index[dim] = DerivedObject(j, -k)
                if dim in self._injective_at:
                    break
                dim, k = self._phi_inverse.apply(dim), k + 1
        return index

    # ---------------------------------------------------------------- functors

    def nakayama_data(self) -> NakayamaPermutationData:
        """sigma and the offsets p_i with nu(P_i) = tau^{-p_i} P_{sigma(i)}."""
        return self._nakayama

    def tau(self, x: DerivedObject, steps: int = 1) -> DerivedObject:
        """tau^steps; negative steps apply tau^{-1}."""
        return x.translate(steps)

    def _shift_once(self, x: DerivedObject) -> DerivedObject:
        i = x.vertex
        return DerivedObject(self._nakayama.sigma_of(i), x.twist - self._nakayama.offset(i) - 1)

    def _unshift_once(self, x: DerivedObject) -> DerivedObject:
        i = self._nakayama.sigma_inverse(x.vertex)
        return DerivedObject(i, x.twist + self._nakayama.offset(i) + 1)

    def shift(self, x: DerivedObject, r: int) -> DerivedObject:
        """X[r]; [2] = tau^{-h} is used to jump over pairs of shifts."""
        pairs, rest = divmod(r, 2)
        y = x.translate(-pairs * self.h)
        return self._shift_once(y) if rest else y

    def shift_by_iteration(self, x: DerivedObject, r: int) -> DerivedObject:
        """X[r] by applying [1] or [-1] |r| times; used to check the [2] = tau^{-h} jump."""
        for _ in range(abs(r)):
            x = self._shift_once(x) if r > 0 else self._unshift_once(x)
        return x

    def nu(self, x: DerivedObject) -> DerivedObject:
        """Serre functor: (i, l) -> (sigma(i), l - p_i)."""
        i = x.vertex
        return DerivedObject(self._nakayama.sigma_of(i), x.twist - self._nakayama.offset(i))

    def nu_power(self, x: DerivedObject, k: int) -> DerivedObject:
        """nu applied k >= 0 times."""
        for _ in range(k):
            x = self.nu(x)
        return x

    def g(self, x: DerivedObject, k: int = 1) -> DerivedObject:
        """(nu o [1])^k = tau^{k(1-h)}."""
        return x.translate(k * (1 - self.h))

    def nu_d(self, x: DerivedObject, d: int) -> DerivedObject:
        """nu o [-d]; nu_1 = tau."""
        return self.nu(self.shift(x, -d))

    # ------------------------------------------------------------- normal form

    def to_module_form(self, x: DerivedObject) -> ModuleForm:
        """M[shift] with M an indecomposable module; [2] = tau^{-h} reduces the twist to [0, h)."""
        if x.vertex not in self.vertices:
            raise InvalidInputError(
                ErrorMessages.UNKNOWN_VERTEX.format(vertex=x.vertex, diagram=self.orientation.diagram.name)
            )
        periods, rest = divmod(x.twist, self.h)
        form = self._forms[(x.vertex, rest)]
        return ModuleForm(form.dim_vector, form.shift - 2 * periods)

    def from_module_form(self, dim_vector: Vector, shift: int) -> DerivedObject:
        """Inverse of to_module_form; rejects vectors that are not positive roots."""
        dim = tuple(int(v) for v in dim_vector)
        if dim not in self._modules:
            raise InvalidInputError(ErrorMessages.NOT_A_ROOT.format(dim_vector=list(dim)))
        return self.shift(self._modules[dim], shift)

    def indecomposable_modules(self) -> List[Tuple[DerivedObject, Vector]]:
        """Every indecomposable module with its coordinate; there are rank * h / 2 of them."""
        return sorted(((x, dim) for dim, x in self._modules.items()), key=lambda item: (item[0].vertex, -item[0].twist))

    def is_module(self, x: DerivedObject) -> bool:
        """True when X lies in the heart mod kQ."""
        return self.to_module_form(x).shift == 0

    def projective(self, vertex: int) -> DerivedObject:
        """P_vertex = (vertex, 0)."""
        return DerivedObject(vertex, 0)

    def injective(self, vertex: int) -> DerivedObject:
        """I_vertex = nu(P_vertex)."""
        return DerivedObject(self._nakayama.sigma_of(vertex), -self._nakayama.offset(vertex))

    # ------------------------------------------------------------------- Homs

    def euler(self, x: Vector, y: Vector) -> int:
        """Euler form <x, y> = x^T E y on dimension vectors."""
        return sum(x[a] * self._euler.rows[a][b] * y[b] for a in range(len(x)) for b in range(len(y)) if x[a] and y[b])

    def hom_dim(self, x: DerivedObject, y: DerivedObject) -> int:
        """dim Hom(X, Y) read off the Euler form of the normal forms."""
        m, n = self.to_module_form(x), self.to_module_form(y)
        gap = n.shift - m.shift
        if gap == 0:
            return max(self.euler(m.dim_vector, n.dim_vector), 0)
        if gap == 1:
            return max(-self.euler(m.dim_vector, n.dim_vector), 0)
        return 0

    def ext_dim(self, x: DerivedObject, y: DerivedObject, degree: int) -> int:
        """dim Hom(X, Y[degree])."""
        return self.hom_dim(x, self.shift(y, degree))

    # --------------------------------------------------------------- identities

    def window(self, factor: int = VERIFY_WINDOW_FACTOR) -> List[DerivedObject]:
        """All objects tau^l(P_i) with 0 <= l < factor * h."""
        return [DerivedObject(i, l) for i in self.vertices for l in range(factor * self.h)]

    def is_half_calabi_yau(self) -> bool:
        """True iff nu^{h/2} = [h/2 - 1] on every object of the verification window."""
        if self.h % 2:
            return False
        half = self.h // 2
        return all(self.nu_power(x, half) == self.shift(x, half - 1) for x in self.window())


@lru_cache(maxsize=None)
def derived_category(orientation: QuiverOrientation) -> DerivedCategory:
    """Shared, immutable engine per orientation."""
    return DerivedCategory(orientation)
