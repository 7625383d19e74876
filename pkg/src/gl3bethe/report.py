"""Pass/fail records, canonical state digests and JSON encoding."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def encode(value: Any) -> Any:
    """Make parameters JSON-friendly: rationals become "p/q" strings."""
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, complex):
        return [repr(value.real), repr(value.imag)]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def state_digest(state) -> str:
    """sha256 over the sorted (word, num, den) triples of an exact state."""
    h = hashlib.sha256()
    for word in sorted(state):
        x = Fraction(state[word])
        h.update(f"{''.join(map(str, word))}:{x.numerator}:{x.denominator};".encode())
    return h.hexdigest()


def scalar_digest(value) -> str:
    x = Fraction(value)
    return hashlib.sha256(f"{x.numerator}:{x.denominator}".encode()).hexdigest()


def digest(value) -> str:
    if isinstance(value, dict):
        return state_digest(value)
    return scalar_digest(value)


@dataclass
class Case:
    identity: str
    params: dict
    passed: bool
    lhs_hash: str | None = None
    rhs_hash: str | None = None
    residual: float | None = None
    note: str | None = None

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "params": encode(self.params),
            "status": self.status,
            "lhs_hash": self.lhs_hash,
            "rhs_hash": self.rhs_hash,
        }
        if self.residual is not None:
            out["residual"] = repr(float(self.residual))
        if self.note:
            out["note"] = self.note
        return out


def compare(identity: str, params: dict, lhs, rhs, note: str | None = None) -> Case:
    """Exact comparison of two states or two scalars."""
    lh, rh = digest(lhs), digest(rhs)
    return Case(identity, params, lhs == rhs and lh == rh, lh, rh, note=note)


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)

    def add(self, case: Case) -> Case:
        self.cases.append(case)
        return case

    def extend(self, other: "Report") -> "Report":
        self.cases.extend(other.cases)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def summary(self) -> list[tuple[str, int, int]]:
        """(identity, trials, failures) in first-seen order."""
        table: dict[str, list[int]] = {}
        for c in self.cases:
            row = table.setdefault(c.identity, [0, 0])
            row[0] += 1
            row[1] += 0 if c.passed else 1
        return [(k, v[0], v[1]) for k, v in table.items()]

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": [c.to_json() for c in self.cases]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)
