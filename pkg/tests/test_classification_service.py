import pytest

from constants import Routes
from controllers.example_controller import ExampleController
from controllers.trivext_controller import TrivextController
from db import CertificateStore
from errors import InvalidInputError
from services.classification_service import ClassificationService


@pytest.fixture
def store(tmp_path):
    return CertificateStore(str(tmp_path / "certificates.data"))


def test_classify_trivext_returns_the_diagram():
    diagram, rows = ClassificationService().classify_trivext("d", 4, 2, 5)
    assert diagram.name == "D4"
    assert [row.d for row in rows if row.representation_finite] == [4]


def test_resolve_prefers_built_in_examples(store):
    service = ClassificationService(store)
    assert service.resolve("ctd").route == Routes.EXAMPLE
    with pytest.raises(InvalidInputError):
        service.resolve("A3-d2-0")


def test_resolve_without_store():
    with pytest.raises(InvalidInputError):
        ClassificationService().resolve("A3-d2-0")


def test_save_without_store_writes_nothing():
    service = ClassificationService()
    certificate, _ = service.verify_example("cta2")
    assert service.save([certificate]) == 0


def test_controllers_share_one_store(store):
    service = ClassificationService(store)
    TrivextController(service).classify("A", 3, 2, 2, fmt="json")
    ExampleController(service).verify("ctd", fmt="json")
    ids = [c.certificate_id for c in store.list_certificates()]
    assert "ctd" in ids
    assert "A3-d2-0" in ids
    assert service.resolve("A3-d2-0").d == 2


def test_numeric_verdict_and_engine():
    service = ClassificationService()
    assert service.numeric_verdict(1, 6, 2)
    assert service.nakayama_engine(1, 6).algebra.loewy_length == 7
