from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from constants import Routes
from errors import InvalidInputError
from messages import ErrorMessages


@dataclass(frozen=True)
class NakayamaAlgebra:
    """Symmetric Nakayama algebra on the cyclic quiver 0 -> 1 -> ... -> n-1 -> 0 with rad^(an+1) = 0."""

    a: int
    n: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.n < 1:
            raise InvalidInputError(ErrorMessages.BAD_NAKAYAMA.format(a=self.a, n=self.n))

    @property
    def loewy_length(self) -> int:
        return self.a * self.n + 1

    def module(self, top: int, length: int) -> "SerialModule":
        if not 1 <= length <= self.loewy_length:
            raise InvalidInputError(
                ErrorMessages.BAD_SERIAL_MODULE.format(top=top, length=length, loewy=self.loewy_length)
            )
        return SerialModule(top=top % self.n, length=length)

    def projective(self, vertex: int) -> "SerialModule":
        return SerialModule(top=vertex % self.n, length=self.loewy_length)

    def simple(self, vertex: int) -> "SerialModule":
        return SerialModule(top=vertex % self.n, length=1)

    def is_projective(self, module: "SerialModule") -> bool:
        return module.length == self.loewy_length

    def projectives(self) -> List["SerialModule"]:
        return [self.projective(v) for v in range(self.n)]

    def non_projectives(self) -> List["SerialModule"]:
        """All n(L-1) = a n^2 non-projective indecomposables, ordered by (top, length)."""
        return [SerialModule(top, length) for top in range(self.n) for length in range(1, self.loewy_length)]

    def indecomposables(self) -> List["SerialModule"]:
        return [SerialModule(top, length) for top in range(self.n) for length in range(1, self.loewy_length + 1)]

    def composition_factors(self, module: "SerialModule") -> Tuple[int, ...]:
        """Vertices of the radical layers, top first."""
        return tuple((module.top + t) % self.n for t in range(module.length))

    def to_dict(self) -> Dict:
        return {"a": self.a, "n": self.n, "loewy_length": self.loewy_length}

    @staticmethod
    def from_dict(data: Dict) -> "NakayamaAlgebra":
        return NakayamaAlgebra(a=int(data["a"]), n=int(data["n"]))


@dataclass(frozen=True, order=True)
class SerialModule:
    """Uniserial module M(top, length); its composition factors are top, top+1, ... mod n."""

    top: int
    length: int

    def __str__(self) -> str:
        return f"M({self.top},{self.length})"

    def to_list(self) -> List[int]:
        return [self.top, self.length]

    @staticmethod
    def from_list(data: List[int]) -> "SerialModule":
        return SerialModule(top=int(data[0]), length=int(data[1]))


@dataclass(frozen=True)
class NumericTriple:
    a: int
    n: int
    d: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.n < 1:
            raise InvalidInputError(ErrorMessages.BAD_NAKAYAMA.format(a=self.a, n=self.n))
        if self.d < 2:
            raise InvalidInputError(ErrorMessages.D_TOO_SMALL.format(minimum=2, d=self.d))

    def to_dict(self) -> Dict:
        return {"a": self.a, "n": self.n, "d": self.d}

    @staticmethod
    def from_dict(data: Dict) -> "NumericTriple":
        return NumericTriple(a=int(data["a"]), n=int(data["n"]), d=int(data["d"]))


@dataclass
class NakayamaEnumeration:
    """All d-cluster-tilting modules of one algebra, or the reason none were searched."""

    algebra: NakayamaAlgebra
    d: int
    status: str = Routes.SEARCH
    summand_sets: List[List[SerialModule]] = field(default_factory=list)

    @property
    def attempted(self) -> bool:
        return self.status != Routes.NOT_ATTEMPTED

    @property
    def verdict(self) -> Optional[bool]:
        return bool(self.summand_sets) if self.attempted else None

    def to_dict(self) -> Dict:
        return {
            "algebra": self.algebra.to_dict(),
            "d": self.d,
            "status": self.status,
            "verdict": self.verdict,
            "summand_sets": [[m.to_list() for m in summands] for summands in self.summand_sets],
        }
