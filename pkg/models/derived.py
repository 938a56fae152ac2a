from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple


@dataclass(frozen=True, order=True)
class DerivedObject:
    """The indecomposable tau^twist(P_vertex) of the bounded derived category."""

    vertex: int
    twist: int

    def translate(self, steps: int) -> "DerivedObject":
        return DerivedObject(self.vertex, self.twist + steps)

    def __str__(self) -> str:
        return f"t^{self.twist}P{self.vertex}"

    def to_dict(self) -> Dict:
        return {"vertex": self.vertex, "twist": self.twist}

    @staticmethod
    def from_dict(data: Dict) -> "DerivedObject":
        return DerivedObject(vertex=int(data["vertex"]), twist=int(data["twist"]))


@dataclass(frozen=True)
class ModuleForm:
    """Normal form M[shift] with M an indecomposable module given by its dimension vector."""

    dim_vector: Tuple[int, ...]
    shift: int

    def to_dict(self) -> Dict:
        return {"dim_vector": list(self.dim_vector), "shift": self.shift}

    @staticmethod
    def from_dict(data: Dict) -> "ModuleForm":
        return ModuleForm(dim_vector=tuple(int(x) for x in data["dim_vector"]), shift=int(data["shift"]))


@dataclass(frozen=True)
class NakayamaPermutationData:
    """I_i = tau^{-p_i}(P_sigma(i)); tuples are indexed by vertex - 1."""

    sigma: Tuple[int, ...]
    offsets: Tuple[int, ...]

    def sigma_of(self, vertex: int) -> int:
        return self.sigma[vertex - 1]

    def offset(self, vertex: int) -> int:
        return self.offsets[vertex - 1]

    def sigma_inverse(self, vertex: int) -> int:
        return self.sigma.index(vertex) + 1

    def to_dict(self) -> Dict:
        return {"sigma": list(self.sigma), "offsets": list(self.offsets)}

    @staticmethod
    def from_dict(data: Dict) -> "NakayamaPermutationData":
        return NakayamaPermutationData(
            sigma=tuple(int(x) for x in data["sigma"]),
            offsets=tuple(int(x) for x in data["offsets"]),
        )
