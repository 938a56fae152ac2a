"""Stable module categories of symmetric Nakayama algebras.

Modules are uniserial, written M(top, length) with composition factors top, top+1, ...
(mod n). Projective-injectives are the modules of length L = an + 1.
"""

from __future__ import annotations

import logging
import threading
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from constants import NAKAYAMA_MAX_MULTIPLICITY, NAKAYAMA_MAX_SIMPLES, CheckKinds, Routes
from errors import InvalidInputError, VerificationError
from messages import ErrorMessages, InfoMessages
from models.orbit import Check
from models.serial import NakayamaAlgebra, NakayamaEnumeration, SerialModule
from utils.budget import nakayama_budget
from utils.clique import compatibility_graph, maximal_cliques

logger = logging.getLogger(__name__)

Profile = Tuple[int, ...]


class SymmetricNakayama:
    """Syzygies, Homs and d-cluster-tilting modules of one symmetric Nakayama algebra."""

    def __init__(self, algebra: NakayamaAlgebra) -> None:
        self.algebra = algebra
        self.n = algebra.n
        self.loewy = algebra.loewy_length
        self.ext_period = 2 * self.n
        self._profiles: Dict[Tuple[SerialModule, SerialModule], Profile] = {}
        self._lock = threading.Lock()

    # ------------------------------------------------------------- syzygies

    def _require_non_projective(self, module: SerialModule) -> None:
        if self.algebra.is_projective(module):
            raise InvalidInputError(ErrorMessages.PROJECTIVE_SYZYGY.format(module=module))

    def syzygy(self, module: SerialModule) -> SerialModule:
        """Kernel of the projective cover: Omega M(i, l) = M(i + l, L - l)."""
        self._require_non_projective(module)
        return SerialModule((module.top + module.length) % self.n, self.loewy - module.length)

    def cosyzygy(self, module: SerialModule) -> SerialModule:
        """Cokernel of the injective envelope: Omega^-1 M(j, m) = M(j - (L - m), L - m)."""
        self._require_non_projective(module)
        return SerialModule((module.top - (self.loewy - module.length)) % self.n, self.loewy - module.length)

    def syzygy_power(self, module: SerialModule, r: int) -> SerialModule:
        """Omega^r for any integer r; Omega^2 is the rotation top -> top + 1."""
        self._require_non_projective(module)
        pairs, rest = divmod(r, 2)
        rotated = SerialModule((module.top + pairs) % self.n, module.length)
        return self.syzygy(rotated) if rest else rotated

    # ----------------------------------------------------------------- Homs

    def hom_dim(self, m: SerialModule, n: SerialModule) -> int:
        """Radical layers t of N with rad^t N a quotient of M."""
        low = max(0, n.length - m.length)
        return self._count(low, n.length - 1, m.top - n.top)

    def stable_hom_dim(self, m: SerialModule, n: SerialModule) -> int:
        """Layers whose map does not lift to the projective cover of N (those with t >= L - len M do)."""
        low = max(0, n.length - m.length)
        high = min(n.length - 1, self.loewy - m.length - 1)
        return self._count(low, high, m.top - n.top)

    def _count(self, low: int, high: int, residue: int) -> int:
        if high < low:
            return 0
        residue %= self.n
        first = low + (residue - low) % self.n
        return 0 if first > high else (high - first) // self.n + 1

    def ext_dim(self, m: SerialModule, n: SerialModule, degree: int) -> int:
        """Ext^degree(M, N) = stable Hom(Omega^degree M, N) for degree >= 1."""
        if degree < 1:
            raise InvalidInputError(ErrorMessages.D_TOO_SMALL.format(minimum=1, d=degree))
        if self.algebra.is_projective(m) or self.algebra.is_projective(n):
            return 0
        return self.stable_hom_dim(self.syzygy_power(m, degree), n)

    def ext_profile(self, m: SerialModule, n: SerialModule) -> Profile:
        """Stable Hom(Omega^r M, N) for 0 <= r < 2n."""
        key = (m, n)
        with self._lock:
            cached = self._profiles.get(key)
        if cached is not None:
            return cached
        profile = tuple(self.stable_hom_dim(self.syzygy_power(m, r), n) for r in range(self.ext_period))
        with self._lock:
            self._profiles[key] = profile
        return profile

    def vanishes(self, m: SerialModule, n: SerialModule, d: int) -> bool:
        """Ext^r(M, N) = 0 for 1 <= r <= d-1."""
        profile = self.ext_profile(m, n)
        return all(profile[r % self.ext_period] == 0 for r in range(1, d))

    # ------------------------------------------------------ cluster tilting

    def serre_orbits(self, d: int) -> List[Tuple[SerialModule, ...]]:
        """Orbits of Omega^(d+1), the functor nu_d of the stable category."""
        seen: Set[SerialModule] = set()
        orbits = []
        for module in self.algebra.non_projectives():
            if module in seen:
                continue
            orbit = [module]
            other = self.syzygy_power(module, d + 1)
            while other != module:
                orbit.append(other)
                other = self.syzygy_power(other, d + 1)
            seen.update(orbit)
            orbits.append(tuple(sorted(orbit)))
        return orbits

    def transcript(self, summands: Iterable[SerialModule], d: int) -> Tuple[bool, List[Check]]:
        """Checks that the summands form a d-cluster-tilting module, with every Hom computed on the way."""
        modules = sorted(set(summands))
        projectives = [m for m in modules if self.algebra.is_projective(m)]
        members = [m for m in modules if not self.algebra.is_projective(m)]
        checks = [Check(CheckKinds.PROJECTIVES, tuple(p.to_list() for p in projectives), 0, len(projectives))]
        for x in members:
            for y in members:
                for r in range(1, d):
                    checks.append(Check(CheckKinds.RIGIDITY, (x.to_list(), y.to_list()), r, self.ext_dim(x, y, r)))
        inside = set(members)
        for z in self.algebra.non_projectives():
            if z in inside:
                continue
            checks.append(self._witness(z, members, d, left=True))
            checks.append(self._witness(z, members, d, left=False))
        verdict = len(projectives) == self.n and all(
            c.value == 0 if c.kind == CheckKinds.RIGIDITY else c.value != 0 for c in checks
        )
        return verdict, checks

    def _witness(self, z: SerialModule, members: Sequence[SerialModule], d: int, left: bool) -> Check:
        kind = CheckKinds.LEFT_WITNESS if left else CheckKinds.RIGHT_WITNESS
        for x in members:
            pair = (z, x) if left else (x, z)
            for r in range(1, d):
                value = self.ext_dim(pair[0], pair[1], r)
                if value:
                    return Check(kind, (pair[0].to_list(), pair[1].to_list()), r, value)
        return Check(kind, (z.to_list(),), 0, 0)

    def is_d_ct_module(self, summands: Iterable[SerialModule], d: int) -> bool:
        """Verdict of transcript; d must be at least 2."""
        if d < 2:
            raise InvalidInputError(ErrorMessages.D_TOO_SMALL.format(minimum=2, d=d))
        return self.transcript(summands, d)[0]

    def _perp_closed(self, members: Sequence[SerialModule], d: int) -> bool:
        inside = set(members)
        for z in self.algebra.non_projectives():
            if z in inside:
                continue
            if all(self.vanishes(z, x, d) for x in members) or all(self.vanishes(x, z, d) for x in members):
                return False
        return True

    def enumerate_d_ct(self, d: int, budget: Optional[int] = None) -> NakayamaEnumeration:
        """Every basic d-cluster-tilting module, projectives included, in lexicographic order."""
        if d < 2:
            raise InvalidInputError(ErrorMessages.D_TOO_SMALL.format(minimum=2, d=d))
        candidates = self.algebra.non_projectives()
        budget = nakayama_budget() if budget is None else budget
        if len(candidates) > budget:
            logger.warning(
                InfoMessages.BUDGET_EXCEEDED.format(size=len(candidates), budget=budget, route=Routes.NOT_ATTEMPTED)
            )
            return NakayamaEnumeration(self.algebra, d, Routes.NOT_ATTEMPTED)

        orbits = [
            orbit
            for orbit in self.serre_orbits(d)
            if all(self.vanishes(x, y, d) for x in orbit for y in orbit)
        ]
        graph = compatibility_graph(
            list(range(len(orbits))),
            lambda a, b: all(
                self.vanishes(x, y, d) and self.vanishes(y, x, d) for x in orbits[a] for y in orbits[b]
            ),
        )
        cliques = maximal_cliques(graph)
        found = []
        for clique in cliques:
            members = sorted(x for index in clique for x in orbits[index])
            if self._perp_closed(members, d):
                found.append(sorted(self.algebra.projectives() + members))
        found.sort()
        logger.debug(InfoMessages.CLIQUES_FOUND, d, len(cliques), len(found))
        result = NakayamaEnumeration(self.algebra, d, Routes.SEARCH, found)
        if not divides2n_check(result, self.n, d):
            raise VerificationError(
                ErrorMessages.DIVIDES_2N_VIOLATED.format(a=self.algebra.a, n=self.n, d=d),
                witness={"summands": [[m.to_list() for m in s] for s in found]},
            )
        return result


@lru_cache(maxsize=None)
def symmetric_nakayama(a: int, n: int) -> SymmetricNakayama:
    """Cached engine for the algebra with n simples and Loewy length an + 1."""
    return SymmetricNakayama(NakayamaAlgebra(a, n))


# ---------------------------------------------------------------- arithmetic


def _divisor(a: int, n: int, d: int) -> int:
    return (a * n + 1) * (d - 1) + 2


def condition_a(a: int, n: int, d: int) -> bool:
    """((an+1)(d-1) + 2) | 2n."""
    return (2 * n) % _divisor(a, n, d) == 0


def condition_b(a: int, n: int, d: int) -> bool:
    """((an+1)(d-1) + 2) | tn with t = gcd(d+1, 2an)."""
    t = gcd(d + 1, 2 * a * n)
    return (t * n) % _divisor(a, n, d) == 0


def classify_numeric(a: int, n: int, d: int) -> bool:
    """Divisibility route: either arithmetic condition suffices."""
    return condition_a(a, n, d) or condition_b(a, n, d)


def classification_predicate(a: int, n: int, d: int) -> bool:
    """(a, n, d) lies in {(1, t, 2t-1) : t >= 2} or is one of (1, 3, 2), (1, 6, 2), (2, 3, 2)."""
    if a == 1 and n >= 2 and d == 2 * n - 1:
        return True
    return (a, n, d) in {(1, 3, 2), (1, 6, 2), (2, 3, 2)}


def divides2n_check(found: NakayamaEnumeration, n: int, d: int) -> bool:
    """A nonempty enumeration forces (d+1) | 2n."""
    return not found.summand_sets or (2 * n) % (d + 1) == 0


def newconditionb(n: int, d: int) -> Optional[bool]:
    """For a = 1 and 2n = b(d+1): (b(d-1) + 2) | b(d+1). None when (d+1) does not divide 2n."""
    if (2 * n) % (d + 1):
        return None
    b = 2 * n // (d + 1)
    return (b * (d + 1)) % (b * (d - 1) + 2) == 0


def numeric_grid(
    a_max: int = NAKAYAMA_MAX_MULTIPLICITY, n_max: int = NAKAYAMA_MAX_SIMPLES
) -> List[Dict[str, int | bool]]:
    """Both numeric verdicts for a <= a_max, n <= n_max, 2 <= d <= 2an + 3."""
    rows: List[Dict[str, int | bool]] = []
    for a in range(1, a_max + 1):
        for n in range(1, n_max + 1):
            for d in range(2, 2 * a * n + 4):
                rows.append(
                    {
                        "a": a,
                        "n": n,
                        "d": d,
                        "condition_a": condition_a(a, n, d),
                        "condition_b": condition_b(a, n, d),
                        "numeric": classify_numeric(a, n, d),
                        "closed_form": classification_predicate(a, n, d),
                    }
                )
    return rows
