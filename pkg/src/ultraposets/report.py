"""Pass/fail results with witnesses, and their JSON form."""

from __future__ import annotations

from dataclasses import dataclass, fields, is_dataclass
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive check.

    Truthy iff it passed.  ``witness`` is the first counterexample found on
    failure, or supporting data (a separating pair, a bijection) on success.
    ``probes`` counts the elementary comparisons made.
    """

    ok: bool
    witness: Any = None
    probes: int = 0

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "witness": to_jsonable(self.witness), "probes": self.probes}


def to_jsonable(obj: Any) -> Any:
    """Recursively turn witnesses into JSON-friendly values (deterministically)."""
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(v) for v in obj), key=repr)
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj) if f.repr}
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    return repr(obj)
