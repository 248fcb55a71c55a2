"""Shared test fixtures: experience builders and hand-built evens texts."""

from __future__ import annotations

from limitlab import (
    PAUSE,
    Experience,
    Fate,
    LanguageFamily,
    Universe,
    decimal_universe,
    evens_language,
    fate_from_function,
    odds_language,
    registry_oracle,
)

U = decimal_universe()


def standard_family(oracle: bool = True) -> LanguageFamily:
    return LanguageFamily(
        U,
        (evens_language(U), odds_language(U)),
        registry_oracle() if oracle else None,
    )


def exp(spec: str, universe: Universe = U) -> Experience:
    """Build an experience from a token string like "2 4 # 5"."""
    tokens = spec.split()
    return Experience(
        tuple(PAUSE if t == "#" else universe.parse(t) for t in tokens)
    )


def art(rank: int, universe: Universe = U):
    return universe.artefact(rank)


def plain_evens_text(universe: Universe = U) -> Fate:
    """2, 4, 6, 8, 10, ..."""
    return fate_from_function(
        lambda n: universe.artefact(2 * (n + 1)),
        platonic=evens_language(universe),
    )


def padded_repeats_evens_text(universe: Universe = U) -> Fate:
    """#, 2, #, 4, 4, #, 6, 6, 6, #, ...: group j holds a pause then j copies of 2j."""

    def at(n: int):
        j = 1
        seen = 0
        while seen + j + 1 <= n:
            seen += j + 1
            j += 1
        offset = n - seen
        return PAUSE if offset == 0 else universe.artefact(2 * j)

    return fate_from_function(at, platonic=evens_language(universe))


def pair_swapped_evens_text(universe: Universe = U) -> Fate:
    """#, 2, 6, 4, 10, 8, 14, 12, ...: a pause, then 2, then descending pairs."""

    def at(n: int):
        if n == 0:
            return PAUSE
        if n == 1:
            return universe.artefact(2)
        j = (n - 2) // 2 + 1
        return universe.artefact(4 * j + 2 if (n - 2) % 2 == 0 else 4 * j)

    return fate_from_function(at, platonic=evens_language(universe))
