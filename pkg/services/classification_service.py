"""Service layer behind the CLI controllers: classification routes, named examples and the store."""

import logging
from typing import Iterable, List, Optional, Tuple

from db import CertificateStore
from errors import InvalidInputError
from messages import ErrorMessages
from models.dynkin import DynkinDiagram
from models.orbit import ClassificationRow, CTCertificate
from models.serial import SerialModule
from services.certificates import cross_verify_nakayama, example_certificate, parse_example_name
from services.equivariant_tilting import classify_trivial_extension
from services.nakayama import SymmetricNakayama, classify_numeric, symmetric_nakayama
from services.root_data import dynkin_diagram

logger = logging.getLogger(__name__)


class ClassificationService:
    """Service for classify, verify and draw operations; certificates go to the store when one is set."""

    def __init__(self, store: Optional[CertificateStore] = None) -> None:
        self.store = store

    def classify_trivext(
        self, family: str, rank: int, d_min: int, d_max: int, exhaustive: bool = False
    ) -> Tuple[DynkinDiagram, List[ClassificationRow]]:
        """Per-d verdicts for T(kQ), Q of the given Dynkin type."""
        diagram = dynkin_diagram(family, rank)
        return diagram, classify_trivial_extension(diagram, d_min, d_max, exhaustive=exhaustive)

    def nakayama_engine(self, a: int, n: int) -> SymmetricNakayama:
        return symmetric_nakayama(a, n)

    def numeric_verdict(self, a: int, n: int, d: int) -> bool:
        """The divisibility route; no modules are built."""
        return classify_numeric(a, n, d)

    def verify_example(self, name: str) -> Tuple[CTCertificate, Optional[List[SerialModule]]]:
        """Verify a named example in the orbit category and, for type A, again as Nakayama modules."""
        return example_certificate(name), cross_verify_nakayama(name)

    def resolve(self, certificate_id: str) -> CTCertificate:
        """Built-in example names first, then the certificate store."""
        try:
            parse_example_name(certificate_id)
        except InvalidInputError:
            pass
        else:
            return example_certificate(certificate_id)
        found = self.store.get(certificate_id) if self.store is not None else None
        if found is None:
            raise InvalidInputError(ErrorMessages.UNKNOWN_CERTIFICATE.format(certificate_id=certificate_id))
        return found

    def save(self, certificates: Iterable[CTCertificate]) -> int:
        """Insert or replace by id; 0 when no store is set."""
        if self.store is None:
            return 0
        count = self.store.add_all(certificates)
        logger.info("stored %d certificates in %s", count, self.store.filepath)
        return count
