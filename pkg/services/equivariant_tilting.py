"""d-cluster-tilting subcategories of the orbit category D^b(kQ)/(nu o [1]).

The orbit category models the stable module category of the trivial extension T(kQ),
so its (nu o [1])-equivariant d-cluster-tilting subcategories are the basic
d-cluster-tilting T(kQ)-modules with their projective summands dropped.
"""

from __future__ import annotations

import logging
import threading
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from constants import WINDOW_FACTOR, CheckKinds, Families, Routes
from errors import InternalError, InvalidInputError, VerificationError
from messages import ErrorMessages, FormatTemplates, InfoMessages
from models.derived import DerivedObject
from models.dynkin import DynkinDiagram, QuiverOrientation
from models.orbit import (
    Check,
    ClassificationRow,
    CTCertificate,
    ObstructionReport,
    OrbitObject,
    RigidityGraph,
)
from services.derived_category import DerivedCategory, derived_category
from services.nakayama import classify_numeric
from services.root_data import coxeter_number, default_orientation
from utils.budget import trivext_budget
from utils.clique import compatibility_graph, maximal_cliques

logger = logging.getLogger(__name__)

Profile = Tuple[int, ...]


def periodicity_check(h: int, d: int) -> bool:
    """(d+1) | 2(h-1): necessary for an equivariant d-cluster-tilting subcategory."""
    return (2 * (h - 1)) % (d + 1) == 0


class OrbitCategory:
    """Hom and Ext dimensions on the fundamental domain {(i, l) : 0 <= l <= h-2}."""

    def __init__(self, orientation: QuiverOrientation) -> None:
        self.orientation = orientation
        self.derived: DerivedCategory = derived_category(orientation)
        self.h = self.derived.h
        self.period = self.h - 1
        self.ext_period = 2 * (self.h - 1)
        self.window = WINDOW_FACTOR * self.h
        self._domain = [OrbitObject(i, l) for i in orientation.vertices for l in range(self.period)]
        self._profiles: Dict[Tuple[int, int, int], Profile] = {}
        self._lock = threading.Lock()

    @property
    def diagram(self) -> DynkinDiagram:
        return self.orientation.diagram

    def fundamental_domain(self) -> List[OrbitObject]:
        """One object per orbit: (i, l) with 0 <= l <= h-2."""
        return list(self._domain)

    def lift(self, obj: OrbitObject) -> DerivedObject:
        """The representative of the orbit with twist in [0, h-2]."""
        return DerivedObject(obj.vertex, obj.twist_mod)

    def reduce(self, x: DerivedObject) -> OrbitObject:
        """The orbit of X under tau^{h-1}."""
        return OrbitObject(x.vertex, x.twist % self.period)

    def check_member(self, obj: OrbitObject) -> None:
        """Raise InvalidInputError unless obj is in the fundamental domain."""
        if obj.vertex not in self.orientation.vertices or not 0 <= obj.twist_mod < self.period:
            raise InvalidInputError(ErrorMessages.NOT_IN_DOMAIN.format(obj=obj, diagram=self.diagram.name))

    def shift(self, obj: OrbitObject, r: int) -> OrbitObject:
        """Orbit of X[r]."""
        return self.reduce(self.derived.shift(self.lift(obj), r))

    def nu_d(self, obj: OrbitObject, d: int) -> OrbitObject:
        """Orbit of nu_d(X) = nu(X[-d])."""
        return self.reduce(self.derived.nu_d(self.lift(obj), d))

    # ------------------------------------------------------------------- Homs

    def orbit_hom_dim(self, x: OrbitObject, y: OrbitObject, degree: int) -> int:
        """Sum over k of dim Hom(X, g^k(Y)[degree]) in the derived category."""
        target = self.derived.shift(self.lift(y), degree)
        source = DerivedObject(x.vertex, 0)
        offset = target.twist - x.twist_mod
        lowest = offset - self.period * ((offset + self.window) // self.period)
        total = 0
        for twist in range(lowest, self.window + 1, self.period):
            value = self.derived.hom_dim(source, DerivedObject(target.vertex, twist))
            if value and abs(twist) > self.window - self.h:
                raise InternalError(ErrorMessages.BOUNDARY_SUPPORT.format(x=x, y=y))
            total += value
        return total

    def ext_profile(self, x: OrbitObject, y: OrbitObject) -> Profile:
        """(dim Hom(X, Y[r]))_r for 0 <= r < 2(h-1); the sequence is periodic in r."""
        key = (x.vertex, y.vertex, (y.twist_mod - x.twist_mod) % self.period)
        with self._lock:
            cached = self._profiles.get(key)
        if cached is not None:
            return cached
        base = OrbitObject(x.vertex, 0)
        other = OrbitObject(y.vertex, key[2])
        profile = tuple(self.orbit_hom_dim(base, other, r) for r in range(self.ext_period))
        with self._lock:
            self._profiles[key] = profile
        return profile

    def ext(self, x: OrbitObject, y: OrbitObject, degree: int) -> int:
        """Ext^degree(X, Y) in the orbit category; degree is read modulo 2(h-1)."""
        return self.ext_profile(x, y)[degree % self.ext_period]

    def vanishes(self, x: OrbitObject, y: OrbitObject, d: int) -> bool:
        """Ext^r(X, Y) = 0 for 1 <= r <= d-1."""
        profile = self.ext_profile(x, y)
        return all(profile[r % self.ext_period] == 0 for r in range(1, d))

    def minimal_self_extension_degree(self, obj: OrbitObject) -> int:
        """Least r >= 1 with Ext^r(X, X) != 0; X is d-rigid exactly when d <= this value."""
        profile = self.ext_profile(obj, obj)
        for r in range(1, self.ext_period + 1):
            if profile[r % self.ext_period]:
                return r
        raise InternalError(ErrorMessages.CHECK_FAILED.format(kind="identity", pair=obj, degree=0, value=0))

    # ------------------------------------------------------------- structures

    def rigidity_graph(self, d: int) -> RigidityGraph:
        """Which objects are d-rigid and which pairs have no Ext^1..Ext^{d-1} either way."""
        self_rigid = frozenset(x for x in self._domain if self.vanishes(x, x, d))
        adjacency: Dict[OrbitObject, Set[OrbitObject]] = {x: set() for x in self._domain}
        for index, x in enumerate(self._domain):
            for y in self._domain[index + 1 :]:
                if self.vanishes(x, y, d) and self.vanishes(y, x, d):
                    adjacency[x].add(y)
                    adjacency[y].add(x)
        return RigidityGraph(
            d=d,
            vertices=list(self._domain),
            self_rigid=self_rigid,
            adjacency={x: frozenset(ys) for x, ys in adjacency.items()},
        )

    def nu_d_orbits(self, d: int) -> List[Tuple[OrbitObject, ...]]:
        """The fundamental domain split into nu_d-orbits."""
        seen: Set[OrbitObject] = set()
        orbits: List[Tuple[OrbitObject, ...]] = []
        for x in self._domain:
            if x in seen:
                continue
            orbit = [x]
            y = self.nu_d(x, d)
            while y != x:
                orbit.append(y)
                y = self.nu_d(y, d)
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        return orbits

    def is_nu_d_closed(self, objects: Iterable[OrbitObject], d: int) -> bool:
        """True when nu_d maps the set into itself."""
        members = set(objects)
        return all(self.nu_d(x, d) in members for x in members)

    # --------------------------------------------------------- verification

    def _witness(self, z: OrbitObject, members: Sequence[OrbitObject], d: int, left: bool) -> Check:
        kind = CheckKinds.LEFT_WITNESS if left else CheckKinds.RIGHT_WITNESS
        for x in members:
            pair = (z, x) if left else (x, z)
            for r in range(1, d):
                value = self.ext(pair[0], pair[1], r)
                if value:
                    return Check(kind, (pair[0].to_list(), pair[1].to_list()), r, value)
        return Check(kind, (z.to_list(),), 0, 0)

    def transcript(self, objects: Iterable[OrbitObject], d: int) -> Tuple[bool, List[Check]]:
        """Every Hom that decides whether add(objects) is d-cluster-tilting."""
        members = sorted(set(objects))
        if not members:
            raise InvalidInputError(ErrorMessages.EMPTY_OBJECT_SET)
        for obj in members:
            self.check_member(obj)
        checks: List[Check] = []
        for x in members:
            for y in members:
                for r in range(1, d):
                    checks.append(Check(CheckKinds.RIGIDITY, (x.to_list(), y.to_list()), r, self.ext(x, y, r)))
        inside = set(members)
        for z in self._domain:
            if z in inside:
                continue
            checks.append(self._witness(z, members, d, left=True))
            checks.append(self._witness(z, members, d, left=False))
        checks.append(Check(CheckKinds.PERIODICITY, (), d, int(periodicity_check(self.h, d))))
        verdict = all(
            c.value == 0 if c.kind == CheckKinds.RIGIDITY else c.value != 0
            for c in checks
            if c.kind != CheckKinds.PERIODICITY
        )
        return verdict, checks

    def is_d_cluster_tilting(self, objects: Iterable[OrbitObject], d: int) -> bool:
        """Verdict of transcript without the checks."""
        return self.transcript(objects, d)[0]

    def certificate(
        self,
        objects: Iterable[OrbitObject],
        d: int,
        certificate_id: Optional[str] = None,
        route: str = Routes.SEARCH,
    ) -> CTCertificate:
        members = sorted(set(objects))
        verdict, checks = self.transcript(members, d)
        return CTCertificate(
            orientation=self.orientation,
            d=d,
            objects=members,
            checks=checks,
            verdict=verdict,
            certificate_id=certificate_id,
            route=route,
        )

    def _perp_closed(self, members: Sequence[OrbitObject], d: int) -> bool:
        inside = set(members)
        for z in self._domain:
            if z in inside:
                continue
            if all(self.vanishes(z, x, d) for x in members):
                return False
            if all(self.vanishes(x, z, d) for x in members):
                return False
        return True

    # ------------------------------------------------------------ enumeration

    def enumerate_d_ct(self, d: int) -> List[CTCertificate]:
        """All equivariant d-cluster-tilting subcategories, in lexicographic order.

        Candidates are unions of nu_d-orbits (every d-cluster-tilting subcategory is
        nu_d-stable), so cliques are searched on the graph of rigid orbits.
        """
        if d < 2:
            raise InvalidInputError(ErrorMessages.D_TOO_SMALL.format(minimum=2, d=d))
        logger.debug(InfoMessages.SEARCH_D, d, len(self._domain))
        graph = self.rigidity_graph(d)
        orbits = [
            orbit
            for orbit in self.nu_d_orbits(d)
            if all(graph.compatible(x, y) for x in orbit for y in orbit)
        ]
        orbit_graph = compatibility_graph(
            list(range(len(orbits))),
            lambda a, b: all(graph.compatible(x, y) for x in orbits[a] for y in orbits[b]),
        )
        cliques = maximal_cliques(orbit_graph)
        found = []
        for clique in cliques:
            members = sorted(x for index in clique for x in orbits[index])
            if self._perp_closed(members, d):
                found.append(members)
        found.sort()
        logger.debug(InfoMessages.CLIQUES_FOUND, d, len(cliques), len(found))

        certificates = []
        for index, members in enumerate(found):
            certificate_id = FormatTemplates.CERTIFICATE_ID.format(diagram=self.diagram.name, d=d, index=index)
            certificate = self.certificate(members, d, certificate_id)
            if not certificate.verdict:
                raise InternalError(ErrorMessages.CHECK_FAILED.format(kind="search", pair=members, degree=d, value=0))
            self.assert_lemmas(certificate)
            certificates.append(certificate)
        return certificates

    def assert_lemmas(self, certificate: CTCertificate) -> None:
        """Periodicity and nu_d-stability hold for every cluster-tilting certificate."""
        d = certificate.d
        if not periodicity_check(self.h, d):
            raise VerificationError(
                ErrorMessages.PERIODICITY_VIOLATED.format(d=d, h=self.h),
                witness={"d": d, "h": self.h, "objects": [o.to_list() for o in certificate.objects]},
            )
        if not self.is_nu_d_closed(certificate.objects, d):
            raise VerificationError(
                ErrorMessages.NOT_NU_D_CLOSED.format(d=d),
                witness={"d": d, "objects": [o.to_list() for o in certificate.objects]},
            )

    def verify_certificate(self, certificate: CTCertificate) -> bool:
        """Re-run the transcript on the stored objects and compare it entry by entry."""
        verdict, checks = self.transcript(certificate.objects, certificate.d)
        return verdict == certificate.verdict and checks == certificate.checks


@lru_cache(maxsize=None)
def orbit_category(orientation: QuiverOrientation) -> OrbitCategory:
    """Cached per orientation; Ext profiles are shared between callers."""
    return OrbitCategory(orientation)


def fundamental_domain(orientation: QuiverOrientation) -> List[OrbitObject]:
    return orbit_category(orientation).fundamental_domain()


def orbit_hom_dim(orientation: QuiverOrientation, x: OrbitObject, y: OrbitObject, degree: int) -> int:
    """Sum over k of dim Hom(X, g^k(Y)[degree])."""
    return orbit_category(orientation).orbit_hom_dim(x, y, degree)


def is_d_cluster_tilting(
    orientation: QuiverOrientation, objects: Iterable[OrbitObject], d: int
) -> Tuple[bool, List[Check]]:
    return orbit_category(orientation).transcript(objects, d)


def enumerate_d_ct(orientation: QuiverOrientation, d: int) -> List[CTCertificate]:
    """Every basic d-cluster-tilting object of the orbit category, as verified certificates."""
    return orbit_category(orientation).enumerate_d_ct(d)


def ontherim_check(certificate: CTCertificate) -> bool:
    """Type D, d >= 4: objects sit on the orbits O_1, O_{n-1}, O_n and not all on O_1."""
    diagram = certificate.diagram
    if diagram.family != Families.D:
        raise InvalidInputError(ErrorMessages.WRONG_FAMILY.format(expected=Families.D, got=diagram.name))
    if not certificate.objects:
        raise InvalidInputError(ErrorMessages.EMPTY_OBJECT_SET)
    n = diagram.rank
    vertices = {obj.vertex for obj in certificate.objects}
    return vertices <= {1, n - 1, n} and vertices != {1}


def _obstruction_step(diagram: DynkinDiagram, vertex: int) -> int:
    m = diagram.rank
    if vertex == 4:
        return 2
    if vertex == 1:
        return 3
    if vertex == m:
        return m - 3
    return 1


def _twist_hom(category: OrbitCategory, obj: OrbitObject, k: int, nonzero: bool) -> Check:
    """dim Hom(X, tau^-k X), required to be nonzero or zero."""
    derived = category.derived
    x = category.lift(obj)
    value = derived.hom_dim(x, derived.tau(x, -k))
    if nonzero and value == 0:
        raise VerificationError(
            ErrorMessages.OBSTRUCTION_FAILED.format(k=k, obj=obj),
            witness={"kind": CheckKinds.OBSTRUCTION, "pair": [obj.to_list()], "degree": k, "value": 0},
        )
    if not nonzero and value != 0:
        raise VerificationError(
            ErrorMessages.RIM_HOM_FAILED.format(k=k, obj=obj, value=value, expected=0),
            witness={"kind": CheckKinds.OBSTRUCTION, "pair": [obj.to_list()], "degree": k, "value": value},
        )
    return Check(CheckKinds.OBSTRUCTION, (obj.to_list(),), k, value)


def _twist_identity(category: OrbitCategory, obj: OrbitObject, k: int, expected: int) -> Check:
    """Hom(g^k X, X[2k]) = Hom(X, tau^-k X): a self-extension in degree 2k of the orbit category."""
    derived = category.derived
    x = category.lift(obj)
    identity = derived.hom_dim(derived.g(x, k), derived.shift(x, 2 * k))
    if identity != expected:
        raise VerificationError(
            ErrorMessages.CALABI_YAU_IDENTITY_FAILED.format(identity="Hom(g^k X, X[2k]) = Hom(X, tau^-k X)", obj=obj),
            witness={"kind": CheckKinds.ORBIT_IDENTITY, "pair": [obj.to_list()], "degree": 2 * k, "value": identity},
        )
    return Check(CheckKinds.ORBIT_IDENTITY, (obj.to_list(),), 2 * k, identity)


def type_e_obstruction(orientation: QuiverOrientation) -> ObstructionReport:
    """Machine-check Hom(X, tau^-k X) != 0 on every orbit of type E.

    Since Hom(g^k X, X[2k]) = Hom(X, tau^-k X), each such X has a nonzero self-extension
    in degree 2k of the orbit category, so no object is d-rigid for d > 2(m-3).
    """
    diagram = orientation.diagram
    if diagram.family != Families.E:
        raise InvalidInputError(ErrorMessages.WRONG_FAMILY.format(expected=Families.E, got=diagram.name))
    category = orbit_category(orientation)
    checks: List[Check] = []
    degrees: Dict[int, int] = {}
    for obj in category.fundamental_domain():
        k = _obstruction_step(diagram, obj.vertex)
        check = _twist_hom(category, obj, k, nonzero=True)
        checks.append(check)
        checks.append(_twist_identity(category, obj, k, check.value))
        degrees[obj.vertex] = 2 * k
    return ObstructionReport(diagram=diagram, orbit_degrees=degrees, rigidity_bound=max(degrees.values()), checks=checks)


def type_d_obstruction(orientation: QuiverOrientation) -> ObstructionReport:
    """Machine-check the Hom facts that leave d = n = 4 as the only type D candidate.

    Off the rim orbits O_1, O_{n-1}, O_n every X has Hom(X, tau^-1 X) != 0, a self-extension
    in degree 2, so for d >= 4 the subcategory lies on the rim and, not inside O_1 alone, meets
    O_{n-1} or O_n. There Hom(X, tau^-2 X) != 0 gives degree 4, bounding d by 4. At d = 4 the
    nu_4-equivariance forces Hom(tau^4 X, X) = 0, false once n >= 6, and periodicity asks
    5 | n+1. Degree 3 never divides 2(h-1) and type D has no 2-cluster-tilting subcategory.
    """
    diagram = orientation.diagram
    if diagram.family != Families.D:
        raise InvalidInputError(ErrorMessages.WRONG_FAMILY.format(expected=Families.D, got=diagram.name))
    category = orbit_category(orientation)
    n = diagram.rank
    branches = (n - 1, n)
    checks: List[Check] = []
    degrees: Dict[int, int] = {}
    tau4_vanishes = True
    for obj in category.fundamental_domain():
        if obj.vertex not in (1,) + branches:
            check = _twist_hom(category, obj, 1, nonzero=True)
            checks.extend([check, _twist_identity(category, obj, 1, check.value)])
            degrees[obj.vertex] = 2
            continue
        checks.append(_twist_hom(category, obj, 1, nonzero=False))
        if obj.vertex in branches:
            check = _twist_hom(category, obj, 2, nonzero=True)
            checks.extend([check, _twist_identity(category, obj, 2, check.value)])
            degrees[obj.vertex] = 4
            # Hom(tau^4 X, X) = Hom(X, tau^-4 X) is nonzero exactly when n >= 6
            tau4 = _twist_hom(category, obj, 4, nonzero=n >= 6)
            checks.append(tau4)
            tau4_vanishes = tau4_vanishes and tau4.value == 0
    excluded = [2, 3]
    if not tau4_vanishes or (n + 1) % 5:
        excluded.append(4)
    bound = max(degrees[v] for v in branches)
    return ObstructionReport(
        diagram=diagram, orbit_degrees=degrees, rigidity_bound=bound, checks=checks, excluded_degrees=tuple(excluded)
    )


OBSTRUCTIONS = {
    Families.D: (type_d_obstruction, Routes.TYPE_D_OBSTRUCTION),
    Families.E: (type_e_obstruction, Routes.TYPE_E_OBSTRUCTION),
}


def classify_trivial_extension(
    diagram: DynkinDiagram,
    d_min: int,
    d_max: int,
    exhaustive: bool = False,
    budget: Optional[int] = None,
    orientation: Optional[QuiverOrientation] = None,
) -> List[ClassificationRow]:
    """Decide for each d in [d_min, d_max] whether T(kQ) is d-representation-finite."""
    if d_min < 2:
        raise InvalidInputError(ErrorMessages.D_TOO_SMALL.format(minimum=2, d=d_min))
    if d_max < d_min:
        raise InvalidInputError(ErrorMessages.BAD_D_RANGE.format(d_min=d_min, d_max=d_max))
    orientation = orientation or default_orientation(diagram)
    h = coxeter_number(diagram)
    size = diagram.rank * (h - 1)
    budget = trivext_budget() if budget is None else budget
    searchable = size <= budget
    logger.info(InfoMessages.CLASSIFY_START, diagram.name, d_min, d_max)
    if not searchable:
        logger.warning(InfoMessages.BUDGET_EXCEEDED.format(size=size, budget=budget, route=_fallback_route(diagram)))

    obstruction: Optional[ObstructionReport] = None
    rows: List[ClassificationRow] = []
    for d in range(d_min, d_max + 1):
        periodic = periodicity_check(h, d)
        if searchable and (periodic or exhaustive):
            certificates = orbit_category(orientation).enumerate_d_ct(d)
            rows.append(ClassificationRow(d, bool(certificates), Routes.SEARCH, certificates))
        elif not periodic:
            rows.append(ClassificationRow(d, False, Routes.PERIODICITY))
        elif diagram.family == Families.A:
            rows.append(ClassificationRow(d, classify_numeric(1, diagram.rank, d), Routes.NAKAYAMA_ARITHMETIC))
        else:
            run, route = OBSTRUCTIONS[diagram.family]
            obstruction = obstruction or run(orientation)
            # only D_4 at d = 4 survives every obstruction; it stays undecided without a search
            verdict = False if obstruction.excludes(d) else None
            rows.append(ClassificationRow(d, verdict, route))
    logger.info(InfoMessages.CLASSIFY_DONE, diagram.name, sorted(r.d for r in rows if r.representation_finite))
    return rows


def _fallback_route(diagram: DynkinDiagram) -> str:
    if diagram.family == Families.A:
        return Routes.NAKAYAMA_ARITHMETIC
    return OBSTRUCTIONS[diagram.family][1]


def representation_finite_degrees(rows: Iterable[ClassificationRow]) -> List[int]:
    """The d whose verdict is True."""
    return [row.d for row in rows if row.representation_finite]
