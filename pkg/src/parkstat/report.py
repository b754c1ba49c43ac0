"""Verification reports shared by every checker and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    identity: str
    n: int | None = None
    status: str = "pass"  # "pass" or "fail"
    lhs: Any = None
    rhs: Any = None
    first_mismatch: Any = None
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        d = {"identity": self.identity, "n": self.n, "status": self.status,
             "lhs": _plain(self.lhs), "rhs": _plain(self.rhs)}
        if self.first_mismatch is not None:
            d["first_mismatch"] = _plain(self.first_mismatch)
        if self.details:
            d["details"] = [_plain(x) for x in self.details]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def check(identity: str, n, lhs, rhs, mismatch=None) -> Report:
    """Report comparing lhs and rhs for exact equality."""
    ok = lhs == rhs
    return Report(identity, n, "pass" if ok else "fail", lhs, rhs,
                  None if ok else (mismatch if mismatch is not None else {"lhs": lhs, "rhs": rhs}))


def combine(identity: str, n, reports: list) -> Report:
    """Single report that passes iff every sub-report passes."""
    failed = [r for r in reports if not r.ok]
    return Report(identity, n, "fail" if failed else "pass",
                  first_mismatch=failed[0].to_dict() if failed else None,
                  details=[r.to_dict() for r in reports])


def _plain(x):
    if x is None or isinstance(x, (bool, int, str, float)):
        return x
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return str(x)
