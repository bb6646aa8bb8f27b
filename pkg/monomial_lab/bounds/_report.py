import json
from dataclasses import dataclass, field
from typing import Any, Dict, List

from monomial_lab._constants import SCHEMA
from monomial_lab._util import canonical_dumps, canonicalize


@dataclass
class BoundReport:
    """Value of a closed-form bound with everything needed to audit it.

    Attributes:
        name: Registry name of the bound (e.g. ``"cmr"``, ``"kq-master"``).
        inputs: Named parameters the value was computed from.
        intermediates: Named terms of the computation.
        value: The bound.
        flags: Markers such as ``"empirical-constant"``, ``"unnormalized"``
            or ``"y-clamped"``.
        notes: Free text, e.g. the alternative branch at ``r = 2``.
    """

    name: str
    inputs: Dict[str, Any]
    value: float
    intermediates: Dict[str, Any] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return canonicalize(
            {
                "schema": SCHEMA,
                "name": self.name,
                "inputs": self.inputs,
                "intermediates": self.intermediates,
                "value": self.value,
                "flags": sorted(set(self.flags)),
                "notes": list(self.notes),
            }
        )

    def to_json(self, indent=None) -> str:
        return canonical_dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BoundReport":
        schema = data.get("schema", SCHEMA)
        if schema != SCHEMA:
            raise ValueError(f"Unsupported report schema {schema!r}, expected {SCHEMA!r}")
        value = data["value"]
        return cls(
            name=data["name"],
            inputs=dict(data.get("inputs", {})),
            value=float(value) if isinstance(value, (int, float, str)) else value,
            intermediates=dict(data.get("intermediates", {})),
            flags=list(data.get("flags", [])),
            notes=list(data.get("notes", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "BoundReport":
        return cls.from_dict(json.loads(text))
