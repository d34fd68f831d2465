"""Structured pass/fail verdicts shared by every checker.

A report is an ordered list of per-law verdicts.  A failed verdict
carries at least one concrete witness tuple (element labels, not
indices); checkers keep only the first witness unless asked for all of
them, so golden output stays deterministic and small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator


@dataclass(frozen=True)
class Verdict:
    law: str
    passed: bool
    witnesses: tuple[tuple[str, ...], ...] = ()

    @property
    def witness(self) -> tuple[str, ...] | None:
        return self.witnesses[0] if self.witnesses else None

    def as_dict(self) -> dict:
        out: dict = {"law": self.law, "pass": self.passed}
        if self.witnesses:
            out["witness"] = list(self.witnesses[0])
            if len(self.witnesses) > 1:
                out["witnesses"] = [list(w) for w in self.witnesses]
        return out


@dataclass
class CheckReport:
    name: str
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def verdict(self, law: str) -> Verdict:
        for v in self.verdicts:
            if v.law == law:
                return v
        raise KeyError(law)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def run_law(
        self,
        law: str,
        failure_iter: Iterable[tuple[int, ...]] | Iterator[tuple[int, ...]],
        to_labels: Callable[[tuple[int, ...]], tuple[str, ...]],
        all_witnesses: bool = False,
    ) -> Verdict:
        """Drain ``failure_iter`` (which yields index-tuple counterexamples)
        into a verdict, stopping at the first witness unless all are wanted."""
        found: list[tuple[str, ...]] = []
        for w in failure_iter:
            found.append(to_labels(w))
            if not all_witnesses:
                break
        v = Verdict(law, not found, tuple(found))
        self.verdicts.append(v)
        return v

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "verdicts": [v.as_dict() for v in self.verdicts],
        }

    def lines(self) -> list[str]:
        out = []
        for v in self.verdicts:
            if v.passed:
                out.append(f"PASS {v.law}")
            else:
                shown = ", ".join("(" + ",".join(w) + ")" for w in v.witnesses)
                out.append(f"FAIL {v.law}  witness {shown}")
        return out
