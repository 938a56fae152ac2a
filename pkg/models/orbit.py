from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from constants import SCHEMA_VERSION, Routes
from models.dynkin import DynkinDiagram, QuiverOrientation


@dataclass(frozen=True, order=True)
class OrbitObject:
    """A derived object modulo nu o [1] = tau^{1-h}; twist_mod lies in [0, h-2]."""

    vertex: int
    twist_mod: int

    def __str__(self) -> str:
        return f"({self.vertex},{self.twist_mod})"

    def to_list(self) -> List[int]:
        return [self.vertex, self.twist_mod]

    @staticmethod
    def from_list(data: List[int]) -> "OrbitObject":
        return OrbitObject(vertex=int(data[0]), twist_mod=int(data[1]))


@dataclass(frozen=True)
class Check:
    """One transcript entry: a Hom dimension that was computed and what it had to be."""

    kind: str
    pair: Tuple[List[int], ...]
    degree: int
    value: int

    def to_dict(self) -> Dict:
        return {"kind": self.kind, "pair": [list(p) for p in self.pair], "degree": self.degree, "value": self.value}

    @staticmethod
    def from_dict(data: Dict) -> "Check":
        return Check(
            kind=str(data["kind"]),
            pair=tuple([int(x) for x in p] for p in data["pair"]),
            degree=int(data["degree"]),
            value=int(data["value"]),
        )


@dataclass
class RigidityGraph:
    """Compatibility graph on the fundamental domain for a fixed d."""

    d: int
    vertices: List[OrbitObject]
    self_rigid: FrozenSet[OrbitObject]
    adjacency: Dict[OrbitObject, FrozenSet[OrbitObject]]

    def compatible(self, x: OrbitObject, y: OrbitObject) -> bool:
        if x == y:
            return x in self.self_rigid
        return y in self.adjacency[x]


@dataclass
class CTCertificate:
    """A verified (or refuted) d-cluster-tilting candidate with its full transcript."""

    orientation: QuiverOrientation
    d: int
    objects: List[OrbitObject]
    checks: List[Check] = field(default_factory=list)
    verdict: bool = False
    certificate_id: Optional[str] = None
    route: str = Routes.SEARCH

    @property
    def diagram(self):
        return self.orientation.diagram

    def to_dict(self) -> Dict:
        return {
            "schema": SCHEMA_VERSION,
            "id": self.certificate_id,
            "diagram": self.diagram.to_dict(),
            "orientation": [list(a) for a in self.orientation.arrows],
            "d": self.d,
            "objects": [o.to_list() for o in self.objects],
            "checks": [c.to_dict() for c in self.checks],
            "verdict": self.verdict,
            "route": self.route,
        }

    @staticmethod
    def from_dict(data: Dict) -> "CTCertificate":
        orientation = QuiverOrientation(
            diagram=DynkinDiagram.from_dict(data["diagram"]),
            arrows=tuple((int(s), int(t)) for s, t in data["orientation"]),
        )
        return CTCertificate(
            orientation=orientation,
            d=int(data["d"]),
            objects=[OrbitObject.from_list(o) for o in data["objects"]],
            checks=[Check.from_dict(c) for c in data.get("checks", [])],
            verdict=bool(data["verdict"]),
            certificate_id=data.get("id"),
            route=str(data.get("route", Routes.SEARCH)),
        )


@dataclass
class ClassificationRow:
    """Verdict for one d; representation_finite is None when no route decided it."""

    d: int
    representation_finite: Optional[bool]
    route: str
    certificates: List[CTCertificate] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "d": self.d,
            "representation_finite": self.representation_finite,
            "route": self.route,
            "certificate_count": len(self.certificates),
            "certificates": [c.to_dict() for c in self.certificates],
        }

    @staticmethod
    def from_dict(data: Dict) -> "ClassificationRow":
        return ClassificationRow(
            d=int(data["d"]),
            representation_finite=data["representation_finite"],
            route=str(data["route"]),
            certificates=[CTCertificate.from_dict(c) for c in data.get("certificates", [])],
        )


@dataclass
class ObstructionReport:
    """Outcome of a type D or type E Hom non-vanishing suite."""

    diagram: DynkinDiagram
    orbit_degrees: Dict[int, int]
    rigidity_bound: int
    checks: List[Check] = field(default_factory=list)
    excluded_degrees: Tuple[int, ...] = ()

    def excludes(self, d: int) -> bool:
        """No equivariant d-cluster-tilting subcategory past the bound or at an excluded degree."""
        return d > self.rigidity_bound or d in self.excluded_degrees

    def to_dict(self) -> Dict:
        return {
            "diagram": self.diagram.to_dict(),
            "orbit_degrees": {str(v): k for v, k in sorted(self.orbit_degrees.items())},
            "rigidity_bound": self.rigidity_bound,
            "excluded_degrees": list(self.excluded_degrees),
            "checks": [c.to_dict() for c in self.checks],
        }
