import json
import os
from typing import Any, Dict, Iterable, List, Optional, Union

from constants import DEFAULT_STORE_FILE
from errors import InvalidInputError
from messages import ErrorMessages
from models.orbit import CTCertificate


class CertificateStore:
    """Simple JSON-file backed store of certificates, keyed by certificate id."""

    def __init__(self, filepath: str = DEFAULT_STORE_FILE) -> None:
        self.filepath = filepath
        self._ensure_file()
        # a file that does not parse is rejected here, before any command writes to it
        self._read_all()

    def _ensure_file(self) -> None:
        if not os.path.exists(self.filepath):
            self._write_all([])

    def _read_all(self) -> List[CTCertificate]:
        try:
            with open(self.filepath, "r", encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, list):
                raise TypeError(f"expected a list of certificates, got {type(data).__name__}")
            return [CTCertificate.from_dict(d) for d in data]
        except FileNotFoundError:
            return []
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidInputError(ErrorMessages.BAD_STORE.format(path=self.filepath, reason=e)) from e

    def _write_all(self, certificates: Iterable[Union[CTCertificate, Dict[str, Any]]]) -> None:
        serializable = [c.to_dict() if isinstance(c, CTCertificate) else c for c in certificates]
        with open(self.filepath, "w", encoding="utf-8", newline="\n") as f:
            json.dump(serializable, f, indent=2, sort_keys=True, ensure_ascii=False)
            f.write("\n")

    def list_certificates(self) -> List[CTCertificate]:
        return self._read_all()

    def get(self, certificate_id: str) -> Optional[CTCertificate]:
        for c in self._read_all():
            if c.certificate_id == certificate_id:
                return c
        return None

    def add_all(self, certificates: Iterable[CTCertificate]) -> int:
        """Insert or replace by id; returns how many were written."""
        stored = {c.certificate_id: c for c in self._read_all()}
        count = 0
        for c in certificates:
            stored[c.certificate_id] = c
            count += 1
        self._write_all(stored[key] for key in sorted(stored, key=str))
        return count
