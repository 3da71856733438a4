"""Verification reports shared by every checker."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from .exactlin import LinMap, unravel, DimensionMismatch


class HypothesisError(ValueError):
    """The theorem being checked does not apply to the given input."""


class InternalInconsistency(AssertionError):
    """Two independent computations disagree; indicates a bug."""


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""

    def line(self) -> str:
        s = f"  [{'ok' if self.passed else 'FAIL'}] {self.name}"
        if not self.passed and self.witness is not None:
            s += f"  witness={_show(self.witness)}"
        if self.detail:
            s += f"  ({self.detail})"
        return s


@dataclass
class Report:
    check: str
    results: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self):
        return self.passed

    def record(self, name: str, passed: bool, witness=None, detail: str = "") -> bool:
        self.results.append(AxiomResult(name, bool(passed), witness, detail))
        return bool(passed)

    def equal(self, name: str, lhs: LinMap, rhs: LinMap, dims: Sequence[int] | None = None) -> bool:
        """Record lhs == rhs; on failure the witness is the first input basis
        multi-index (over ``dims``) where the columns differ."""
        if lhs.shape != rhs.shape:
            raise DimensionMismatch(f"{name}: {lhs.shape} vs {rhs.shape}")
        for j in range(lhs.dom):
            if lhs.column(j) != rhs.column(j):
                # a domain of the ground field is passed as dims (0,)
                w = unravel(j, dims) if dims and all(dims) else (j,)
                i = next(i for i in range(lhs.cod) if lhs.rows[i][j] != rhs.rows[i][j])
                return self.record(name, False, w, f"output coord {i}: {lhs.rows[i][j]} vs {rhs.rows[i][j]}")
        return self.record(name, True)

    def merge(self, other: "Report", prefix: str = ""):
        for r in other.results:
            self.results.append(AxiomResult(prefix + r.name, r.passed, r.witness, r.detail))
        return other.passed

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def failed(self, name: str) -> bool:
        return any(r.name == name and not r.passed for r in self.results)

    def finish(self) -> "Report":
        self.elapsed = time.perf_counter() - self.started
        return self

    def __str__(self):
        head = f"{self.check}: {'PASS' if self.passed else 'FAIL'}"
        lines = [head] + [r.line() for r in self.results]
        for k, v in self.data.items():
            lines.append(f"  {k}: {_show(v)}")
        return "\n".join(lines)

    def records(self) -> list[dict]:
        out = [{"type": "axiom", "check": self.check, "name": r.name, "passed": r.passed,
                "witness": _plain(r.witness), "detail": r.detail} for r in self.results]
        for k, v in self.data.items():
            out.append({"type": "data", "check": self.check, "key": k, "value": _plain(v)})
        out.append({"type": "verdict", "check": self.check, "passed": self.passed,
                    "elapsed": round(self.elapsed, 6)})
        return out


def _show(x) -> str:
    """Human-readable form: fractions as p/q, tuples kept as tuples."""
    from fractions import Fraction
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple):
        inner = ", ".join(_show(v) for v in x)
        return f"({inner},)" if len(x) == 1 else f"({inner})"
    if isinstance(x, list):
        return "[" + ", ".join(_show(v) for v in x) + "]"
    return str(x)


def _plain(x):
    from fractions import Fraction
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, LinMap):
        return [[_plain(v) for v in r] for r in x.rows]
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return x
