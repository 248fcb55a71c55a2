"""Finite-horizon convergence and identification checks.

All limit notions are answered relative to an explicit horizon: a stabilized
report is evidence about the limit, never proof. Verdicts against a fate's
declared platonic language are three-valued because language equality may be
undecided.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .core import Datum, Experience, Fate, TextStrategy, is_pause, make_fate
from .families import Equality, LanguageRepr
from .scientists import Scientist
from .schemas import (
    INDETERMINATE,
    Situation,
    Verdict,
    novelty,
    semantic_transformativeness,
    transformativeness,
)

__all__ = [
    "ConvergenceReport",
    "ExperimentRow",
    "ExperimentTable",
    "IdentificationVerdict",
    "Outcome",
    "TraceStep",
    "TransformationTrace",
    "bc_converges_at",
    "converges_at",
    "identifies_text",
    "identify_class",
    "transformation_trace",
]


class Outcome(Enum):
    IDENTIFIED = "Identified"
    NOT_IDENTIFIED = "NotIdentified"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class ConvergenceReport:
    """Hypothesis trajectory of a scientist along one fate, up to a horizon.

    ``trace[n]`` is the index conjectured on the length-n prefix, for n from 0
    through the horizon. ``stabilized`` means no change happened at the
    horizon itself, so the final index held through a non-empty tail.
    """

    horizon: int
    trace: tuple
    last_change_step: int | None
    stabilized: bool
    stabilized_index: int | None

    @property
    def change_count(self) -> int:
        return sum(
            1 for n in range(1, len(self.trace)) if self.trace[n] != self.trace[n - 1]
        )

    @property
    def stable_since(self) -> int | None:
        """First step of the final constant run, when stabilized."""
        if not self.stabilized:
            return None
        return 0 if self.last_change_step is None else self.last_change_step


@dataclass(frozen=True)
class IdentificationVerdict:
    outcome: Outcome
    reason: str | None
    report: ConvergenceReport
    semantic_settle_step: int | None = None

    @property
    def identified(self) -> bool:
        return self.outcome is Outcome.IDENTIFIED

    def label(self) -> str:
        if self.reason is None:
            return self.outcome.value
        return f"{self.outcome.value}({self.reason})"


def _hypothesis_trace(scientist: Scientist, fate: Fate, horizon: int) -> tuple:
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    data = fate.prefix(horizon).items
    return tuple(
        scientist.conjecture(Experience(data[:n])) for n in range(horizon + 1)
    )


def converges_at(scientist: Scientist, fate: Fate, horizon: int) -> ConvergenceReport:
    """Evaluate the scientist on every prefix up to the horizon."""
    trace = _hypothesis_trace(scientist, fate, horizon)
    last_change = None
    for n in range(1, horizon + 1):
        if trace[n] != trace[n - 1]:
            last_change = n
    stabilized = last_change is None or last_change < horizon
    return ConvergenceReport(
        horizon=horizon,
        trace=trace,
        last_change_step=last_change,
        stabilized=stabilized,
        stabilized_index=trace[-1] if stabilized else None,
    )


def _require_platonic(fate: Fate) -> LanguageRepr:
    if fate.platonic is None:
        raise ValueError("fate carries no declared platonic language")
    return fate.platonic


def identifies_text(
    scientist: Scientist, fate: Fate, horizon: int
) -> IdentificationVerdict:
    """Identified iff the conjecture stabilized on an index denoting the platonic language."""
    platonic = _require_platonic(fate)
    report = converges_at(scientist, fate, horizon)
    if not report.stabilized:
        return IdentificationVerdict(Outcome.NOT_IDENTIFIED, "no-stabilization", report)
    verdict = scientist.family.compare_index_with(report.stabilized_index, platonic)
    if verdict is Equality.EQUAL:
        return IdentificationVerdict(Outcome.IDENTIFIED, None, report)
    if verdict is Equality.NOT_EQUAL:
        return IdentificationVerdict(Outcome.NOT_IDENTIFIED, "wrong-language", report)
    return IdentificationVerdict(Outcome.INDETERMINATE, "equality-unknown", report)


def bc_converges_at(
    scientist: Scientist, fate: Fate, horizon: int
) -> IdentificationVerdict:
    """Behaviourally correct check: the denoted language must settle, indices may churn.

    Identified iff some step starts an unbroken run of provably-equal
    comparisons against the platonic language that reaches the horizon.
    """
    platonic = _require_platonic(fate)
    report = converges_at(scientist, fate, horizon)
    comparisons = [
        scientist.family.compare_index_with(p, platonic) for p in report.trace
    ]
    settle = horizon + 1
    for n in range(horizon, -1, -1):
        if comparisons[n] is not Equality.EQUAL:
            break
        settle = n
    if settle <= horizon:
        return IdentificationVerdict(
            Outcome.IDENTIFIED, None, report, semantic_settle_step=settle
        )
    if comparisons[-1] is Equality.UNKNOWN:
        return IdentificationVerdict(Outcome.INDETERMINATE, "equality-unknown", report)
    return IdentificationVerdict(Outcome.NOT_IDENTIFIED, "wrong-language", report)


@dataclass(frozen=True)
class ExperimentRow:
    language: str
    strategy: str
    seed: int
    horizon: int
    verdict: str
    last_change_step: int | None


@dataclass(frozen=True)
class ExperimentTable:
    """One identification verdict per (language, strategy, seed) cell."""

    rows: tuple
    horizon: int

    CSV_COLUMNS = ("language", "strategy", "seed", "horizon", "verdict", "last_change_step")

    @property
    def all_identified(self) -> bool:
        return all(r.verdict == "Identified" for r in self.rows)

    def summary(self) -> str:
        if not self.rows:
            return "vacuously identifiable (empty class)"
        done = sum(1 for r in self.rows if r.verdict == "Identified")
        status = "identified" if done == len(self.rows) else "not identified"
        return (
            f"class {status} at horizon {self.horizon}: "
            f"{done}/{len(self.rows)} cells Identified"
        )

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(self.CSV_COLUMNS)
        for r in self.rows:
            writer.writerow(
                [
                    r.language,
                    r.strategy,
                    r.seed,
                    r.horizon,
                    r.verdict,
                    "" if r.last_change_step is None else r.last_change_step,
                ]
            )
        return out.getvalue()


def identify_class(
    scientist: Scientist,
    languages: Iterable[LanguageRepr],
    strategies: Sequence[TextStrategy],
    seeds: Sequence[int],
    horizon: int,
) -> ExperimentTable:
    """Run identifies_text over every (language, strategy, seed) cell.

    Rows are ordered by the input iteration order, never by completion order.
    """
    rows = []
    for lang in languages:
        for strategy in strategies:
            for seed in seeds:
                fate = make_fate(lang, strategy, seed)
                verdict = identifies_text(scientist, fate, horizon)
                rows.append(
                    ExperimentRow(
                        language=lang.describe(),
                        strategy=str(strategy),
                        seed=seed,
                        horizon=horizon,
                        verdict=verdict.label(),
                        last_change_step=verdict.report.last_change_step,
                    )
                )
    return ExperimentTable(rows=tuple(rows), horizon=horizon)


@dataclass(frozen=True)
class TraceStep:
    """One step of a schema sweep along a fate.

    The schema flags rate the step's datum as a candidate appended to the
    prefix seen so far; pause steps carry null flags. ``hyp_changed`` is raw
    index movement and is defined on pause steps too.
    """

    step: int
    datum: Datum
    hyp_index: int
    hyp_changed: bool
    novel: int | None
    transformative: int | None
    semantically_transformative: Verdict | None


@dataclass(frozen=True)
class TransformationTrace:
    steps: tuple


def transformation_trace(
    scientist: Scientist, fate: Fate, horizon: int
) -> TransformationTrace:
    """Sweep novelty and transformativeness along the fate, step by step."""
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    data = fate.prefix(horizon + 1).items
    indices = tuple(
        scientist.conjecture(Experience(data[:n])) for n in range(horizon + 2)
    )
    steps = []
    for n in range(horizon + 1):
        datum = data[n]
        changed = indices[n + 1] != indices[n]
        if is_pause(datum):
            novel = transformative = semantic = None
        else:
            situation = Situation(scientist, Experience(data[:n]))
            novel = novelty(datum, situation)
            transformative = transformativeness(datum, situation)
            semantic = semantic_transformativeness(datum, situation)
        steps.append(
            TraceStep(
                step=n,
                datum=datum,
                hyp_index=indices[n],
                hyp_changed=changed,
                novel=novel,
                transformative=transformative,
                semantically_transformative=semantic,
            )
        )
    return TransformationTrace(steps=tuple(steps))
