"""The explicit cluster-tilting modules of trivial extensions of A_n and D_4.

Each example is built in orbit coordinates and verified by the orbit-category engine.
The type A examples are verified a second time as modules over the symmetric Nakayama
algebra T(kQ_n) with n simples and Loewy length n + 1, using the correspondence
vertex i -> i - 1, so that P_i of kQ_n becomes M(i - 1, n - i + 1).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from constants import CheckKinds, Families, Routes
from errors import InvalidInputError, VerificationError
from messages import ErrorMessages
from models.orbit import CTCertificate, OrbitObject
from models.serial import SerialModule
from services.equivariant_tilting import orbit_category
from services.nakayama import symmetric_nakayama
from services.root_data import default_orientation, dynkin_diagram, simple_dimension_vector

logger = logging.getLogger(__name__)

FIXED_EXAMPLES = ("cta2", "cta3", "ctd", "d4-derived")
WORKED_TYPE_A_RANKS = range(2, 7)


@dataclass(frozen=True)
class ExampleSetup:
    name: str
    family: str
    rank: int
    d: int


def parse_example_name(name: str) -> ExampleSetup:
    name = name.strip().lower()
    if name.startswith("cta1:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise InvalidInputError(ErrorMessages.UNKNOWN_EXAMPLE.format(name=name)) from None
        if n < 2:
            raise InvalidInputError(ErrorMessages.UNKNOWN_EXAMPLE.format(name=name))
        return ExampleSetup(name, Families.A, n, 2 * n - 1)
    setups = {
        "cta2": ExampleSetup("cta2", Families.A, 3, 2),
        "cta3": ExampleSetup("cta3", Families.A, 6, 2),
        "ctd": ExampleSetup("ctd", Families.D, 4, 4),
        "d4-derived": ExampleSetup("d4-derived", Families.D, 4, 4),
    }
    if name not in setups:
        raise InvalidInputError(ErrorMessages.UNKNOWN_EXAMPLE.format(name=name))
    return setups[name]


def example_objects(setup: ExampleSetup) -> List[OrbitObject]:
    """Non-projective summands in orbit coordinates; Omega is the shift [-1]."""
    category = orbit_category(default_orientation(dynkin_diagram(setup.family, setup.rank)))
    if setup.name.startswith("cta1:"):
        return [OrbitObject(setup.rank, 0)]
    if setup.name == "cta2":
        simple = category.derived.from_module_form(simple_dimension_vector(category.orientation, 2), 0)
        return sorted({OrbitObject(1, 0), OrbitObject(2, 0), category.reduce(simple)})
    if setup.name == "cta3":
        return sorted(
            {category.shift(OrbitObject(vertex, 0), -3 * i) for i in range(4) for vertex in (5, 6)}
        )
    if setup.name == "ctd":
        return [OrbitObject(1, 0), OrbitObject(3, 0)]
    # add{tau^{5l}(P_1 + P_4)}: tau^5 = g^{-1} on D_4, so one orbit object each
    return [OrbitObject(1, 0), OrbitObject(4, 0)]


def _failed_check(certificate: CTCertificate) -> Optional[dict]:
    for check in certificate.checks:
        if check.kind == CheckKinds.PERIODICITY:
            continue
        bad = check.value != 0 if check.kind == CheckKinds.RIGIDITY else check.value == 0
        if bad:
            return check.to_dict()
    return None


def example_certificate(name: str) -> CTCertificate:
    """Build and verify one named example; a failing Hom raises VerificationError."""
    setup = parse_example_name(name)
    category = orbit_category(default_orientation(dynkin_diagram(setup.family, setup.rank)))
    certificate = category.certificate(example_objects(setup), setup.d, certificate_id=setup.name, route=Routes.EXAMPLE)
    if not certificate.verdict:
        witness = _failed_check(certificate) or {}
        raise VerificationError(ErrorMessages.CHECK_FAILED.format(**witness), witness=witness)
    category.assert_lemmas(certificate)
    logger.info("verified %s on %s with %d objects", setup.name, certificate.diagram.name, len(certificate.objects))
    return certificate


def worked_example_certificates() -> List[CTCertificate]:
    names = [f"cta1:{n}" for n in WORKED_TYPE_A_RANKS] + ["cta2", "cta3", "ctd"]
    return [example_certificate(name) for name in names]


def nakayama_summands(name: str) -> Optional[Tuple[int, int, List[SerialModule]]]:
    """(n, d, summands) of the type A examples over T(kQ_n), or None for type D."""
    setup = parse_example_name(name)
    if setup.family != Families.A:
        return None
    n = setup.rank
    algebra = symmetric_nakayama(1, n)

    def projective_of_path_algebra(i: int) -> SerialModule:
        return SerialModule(i - 1, n - i + 1)

    if setup.name.startswith("cta1:"):
        modules = [projective_of_path_algebra(n)]
    elif setup.name == "cta2":
        modules = [projective_of_path_algebra(1), projective_of_path_algebra(2), SerialModule(1, 1)]
    else:
        modules = [
            algebra.syzygy_power(projective_of_path_algebra(vertex), 3 * i) for i in range(4) for vertex in (5, 6)
        ]
    return n, setup.d, sorted(set(algebra.algebra.projectives() + modules))


def cross_verify_nakayama(name: str) -> Optional[List[SerialModule]]:
    """Verify a type A example as a Nakayama module; returns its summands, None for type D."""
    found = nakayama_summands(name)
    if found is None:
        return None
    n, d, summands = found
    verdict, checks = symmetric_nakayama(1, n).transcript(summands, d)
    if not verdict:
        witness = next(
            (
                c.to_dict()
                for c in checks
                if (c.value != 0 if c.kind == CheckKinds.RIGIDITY else c.value == 0)
            ),
            {"kind": CheckKinds.PROJECTIVES, "pair": [], "degree": 0, "value": 0},
        )
        raise VerificationError(ErrorMessages.CHECK_FAILED.format(**witness), witness=witness)
    return summands
