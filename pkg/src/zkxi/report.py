"""Structured verification results and the fixed-precision JSON writer."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any


def _num(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = format(x, ".15g")
    if text == "-0":
        text = "0"
    return text


def to_plain(obj: Any) -> Any:
    """Reduce dataclasses, tuples and numpy scalars to JSON-ready builtins."""
    if hasattr(obj, "to_dict"):
        return to_plain(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, complex) or (hasattr(obj, "imag") and hasattr(obj, "real")
                                    and not isinstance(obj, float) and obj.imag != 0):
        z = complex(obj)
        return {"re": z.real, "im": z.imag}
    try:
        return float(obj)
    except (TypeError, ValueError):
        return str(obj)


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with every real number written to 15 significant digits."""

    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f'{pad}"{_escape(k)}": {enc(v, level + 1)}' for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, list):
            if not o:
                return "[]"
            if all(not isinstance(v, (dict, list)) for v in o):
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            return "[\n" + ",\n".join(pad + enc(v, level + 1) for v in o) + "\n" + end + "]"
        if o is True:
            return "true"
        if o is False:
            return "false"
        if o is None:
            return "null"
        if isinstance(o, int):
            return str(o)
        if isinstance(o, float):
            return _num(o)
        return f'"{_escape(str(o))}"'

    return enc(to_plain(obj), 0)


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


@dataclass
class Case:
    id: str
    inputs: dict
    expected: Any
    actual: Any
    deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.deviation <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "inputs": self.inputs,
            "expected": self.expected,
            "actual": self.actual,
            "deviation": float(self.deviation),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
        }


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)
    config_fingerprint: str = ""
    notes: dict = field(default_factory=dict)

    def add(self, id: str, inputs: dict, expected, actual, deviation: float, tolerance: float) -> Case:
        case = Case(id, inputs, expected, actual, float(deviation), float(tolerance))
        self.cases.append(case)
        return case

    def extend(self, other: "Report"):
        self.cases.extend(other.cases)
        self.notes.update(other.notes)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def summary(self) -> dict:
        n = len(self.cases)
        bad = len(self.failures)
        worst = max((c.deviation / c.tolerance for c in self.cases if c.tolerance > 0), default=0.0)
        return {"total": n, "passed": n - bad, "failed": bad, "worst_ratio": worst}

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "config_fingerprint": self.config_fingerprint,
            "summary": self.summary,
            "cases": self.cases,
        }
        if self.notes:
            out["notes"] = self.notes
        return out
