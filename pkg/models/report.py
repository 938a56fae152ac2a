from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from constants import ENGINE_VERSION, REPORT_SCHEMA_VERSION


@dataclass
class RunReport:
    """What one CLI command did: its inputs, its results and (optionally) how long it took."""

    command: str
    inputs: Dict[str, Any]
    results: List[Dict[str, Any]] = field(default_factory=list)
    timing: Optional[float] = None
    engine_version: str = ENGINE_VERSION
    ok: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "timing": self.timing,
            "engine_version": self.engine_version,
            "ok": self.ok,
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "RunReport":
        return RunReport(
            command=str(data["command"]),
            inputs=dict(data.get("inputs", {})),
            results=list(data.get("results", [])),
            timing=data.get("timing"),
            engine_version=str(data.get("engine_version", ENGINE_VERSION)),
            ok=bool(data.get("ok", True)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
