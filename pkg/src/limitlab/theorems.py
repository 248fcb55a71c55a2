"""Executable witnesses for the relationship between novelty and transformation.

Each witness constructs its claim concretely and raises TheoremCheckError on
any violation, so the suite is build-breaking by design. The property checks
combine an exhaustive small-universe sweep with seeded random sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import PAUSE, Experience, Universe, decimal_universe, derived_rng
from .families import LanguageFamily, evens_language, odds_language, registry_oracle
from .sampling import sample_artefact, sample_experience
from .scientists import (
    SCIENTISTS,
    Scientist,
    dumb_visionary,
    ever_changing,
    is_set_driven_sampled,
    last_novel,
    memorizer,
    set_driven_wrapper,
)
from .schemas import Situation, novelty, transformativeness

__all__ = [
    "SuiteItem",
    "TheoremCheckError",
    "WitnessRecord",
    "novelty_guard_without_set_drivenness_witness",
    "novelty_not_necessary_witness",
    "novelty_not_sufficient_witness",
    "run_theorem_suite",
    "set_driven_novelty_property",
]


class TheoremCheckError(AssertionError):
    """A witness or property failed; the build must not be trusted."""


@dataclass(frozen=True)
class WitnessRecord:
    name: str
    claim: str
    values: dict


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise TheoremCheckError(message)


def _witness_family() -> LanguageFamily:
    universe = decimal_universe()
    return LanguageFamily(
        universe,
        (evens_language(universe), odds_language(universe)),
        registry_oracle(),
    )


def novelty_not_sufficient_witness() -> WitnessRecord:
    """A constant scientist meets a never-seen artefact and does not budge."""
    fam = _witness_family()
    u = fam.universe
    scientist = dumb_visionary(fam, fam.specials[0])
    sigma = Experience.of(u.artefact(2), u.artefact(4))
    candidate = u.artefact(5)
    s = Situation(scientist, sigma)
    novel = novelty(candidate, s)
    transformative = transformativeness(candidate, s)
    _check(novel == 1, f"{candidate!r} should be novel after {sigma!r}")
    _check(
        transformative == 0,
        f"constant scientist moved its index on {candidate!r}",
    )
    return WitnessRecord(
        name="novelty-not-sufficient",
        claim="a novel artefact need not be transformative",
        values={
            "scientist": scientist.name,
            "experience": "(2 4)",
            "artefact": "5",
            "novel": novel,
            "transformative": transformative,
        },
    )


def novelty_not_necessary_witness() -> WitnessRecord:
    """An ever-changing scientist moves its index on an already-seen artefact."""
    fam = _witness_family()
    u = fam.universe
    scientist = ever_changing(fam)
    sigma = Experience.of(u.artefact(2), u.artefact(4))
    candidate = u.artefact(2)
    s = Situation(scientist, sigma)
    novel = novelty(candidate, s)
    transformative = transformativeness(candidate, s)
    _check(novel == 0, f"{candidate!r} should not be novel after {sigma!r}")
    _check(
        transformative == 1,
        f"ever-changing scientist held its index on {candidate!r}",
    )
    return WitnessRecord(
        name="novelty-not-necessary",
        claim="a transformative artefact need not be novel",
        values={
            "scientist": scientist.name,
            "experience": "(2 4)",
            "artefact": "2",
            "novel": novel,
            "transformative": transformative,
        },
    )


def _all_experiences(universe: Universe, ranks: range, max_len: int):
    """Every experience up to max_len over the given ranks plus the pause."""
    alphabet = [universe.artefact(r) for r in ranks] + [PAUSE]
    for length in range(max_len + 1):
        for items in product(alphabet, repeat=length):
            yield Experience(items)


def _set_driven_fleet(fam: LanguageFamily) -> list[Scientist]:
    """Memorizer, dumb visionaries, and the set-driven wrap of every registered base."""
    fleet = [
        memorizer(fam),
        dumb_visionary(fam, fam.specials[0]),
        dumb_visionary(fam, fam.specials[1]),
    ]
    for name, builder in sorted(SCIENTISTS.items()):
        if name == "set_driven":
            continue
        fleet.append(set_driven_wrapper(builder(fam, {})))
    return fleet


def set_driven_novelty_property(trials: int = 10_000, seed: int = 0) -> WitnessRecord:
    """For set-driven scientists, every transformative artefact is novel.

    Exhaustively sweeps all experiences of length up to 3 over a 3-element
    universe against every candidate artefact, then samples ``trials`` random
    (scientist, experience, artefact) triples over a wider range.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    fam = _witness_family()
    u = fam.universe
    fleet = _set_driven_fleet(fam)

    exhaustive = 0
    candidates = [u.artefact(r) for r in range(3)]
    for scientist in fleet:
        for sigma in _all_experiences(u, range(3), 3):
            s = Situation(scientist, sigma)
            for a in candidates:
                if transformativeness(a, s) == 1:
                    _check(
                        novelty(a, s) == 1,
                        f"{scientist.name} transformed on non-novel {a!r} after {sigma!r}",
                    )
                exhaustive += 1

    rng = derived_rng("set-driven-novelty", seed)
    for _ in range(trials):
        scientist = rng.choice(fleet)
        sigma = sample_experience(rng, u)
        a = sample_artefact(rng, u)
        s = Situation(scientist, sigma)
        if transformativeness(a, s) == 1:
            _check(
                novelty(a, s) == 1,
                f"{scientist.name} transformed on non-novel {a!r} after {sigma!r}",
            )
    return WitnessRecord(
        name="set-driven-novelty-necessity",
        claim="set-driven scientists transform only on novel artefacts",
        values={
            "scientists": [m.name for m in fleet],
            "exhaustive_cases": exhaustive,
            "sampled_cases": trials,
            "violations": 0,
        },
    )


def novelty_guard_without_set_drivenness_witness(
    trials: int = 10_000, seed: int = 0
) -> WitnessRecord:
    """The last-novel scientist needs novelty to transform yet is order-sensitive.

    Part one sweeps all experiences of length up to 4 over a 3-element
    universe and checks that every transformative append is novel. Part two
    exhibits an equal-content experience pair that the scientist maps to
    different indices.
    """
    fam = _witness_family()
    u = fam.universe
    scientist = last_novel(fam)

    swept = 0
    candidates = [u.artefact(r) for r in range(3)]
    for sigma in _all_experiences(u, range(3), 4):
        s = Situation(scientist, sigma)
        for a in candidates:
            if transformativeness(a, s) == 1:
                _check(
                    novelty(a, s) == 1,
                    f"last_novel transformed on non-novel {a!r} after {sigma!r}",
                )
            swept += 1

    check = is_set_driven_sampled(scientist, trials=trials, seed=seed)
    _check(
        not check.passed,
        "last_novel unexpectedly looked set-driven under sampling",
    )
    sigma, tau = check.counterexample
    _check(sigma.content() == tau.content(), "counterexample pair content differs")
    _check(
        scientist.conjecture(sigma) != scientist.conjecture(tau),
        "counterexample pair does not separate the scientist",
    )
    return WitnessRecord(
        name="novelty-guard-without-set-drivenness",
        claim="requiring novelty to transform does not make a scientist set-driven",
        values={
            "swept_cases": swept,
            "violations": 0,
            "counterexample": (repr(sigma), repr(tau)),
            "found_after_trials": check.trials,
        },
    )


@dataclass(frozen=True)
class SuiteItem:
    name: str
    passed: bool
    summary: str
    values: dict


def run_theorem_suite(trials: int = 10_000, seed: int = 0) -> tuple[SuiteItem, ...]:
    """Run all four checks, converting failures into failed items."""
    checks = (
        novelty_not_sufficient_witness,
        novelty_not_necessary_witness,
        lambda: set_driven_novelty_property(trials=trials, seed=seed),
        lambda: novelty_guard_without_set_drivenness_witness(trials=trials, seed=seed),
    )
    names = (
        "novelty-not-sufficient",
        "novelty-not-necessary",
        "set-driven-novelty-necessity",
        "novelty-guard-without-set-drivenness",
    )
    items = []
    for name, check in zip(names, checks):
        try:
            record = check()
            items.append(SuiteItem(name, True, record.claim, record.values))
        except TheoremCheckError as err:
            items.append(SuiteItem(name, False, str(err), {}))
    return tuple(items)
