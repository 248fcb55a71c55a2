"""Indexed hypothesis spaces: every natural number names a language.

A family lists a finite roster of special (typically infinite) languages and
then enumerates every finite artefact set through a bit-set code, so grammar
indices are total over the naturals while membership stays decidable and
enumeration stays computable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Mapping

from .core import UNIVERSES, Artefact, Universe

__all__ = [
    "AnnotationFamily",
    "Equality",
    "IndeterminateError",
    "LANGUAGES",
    "LanguageFamily",
    "LanguageRepr",
    "NotInFamilyError",
    "all_language",
    "compare_languages",
    "decode_finite_set",
    "encode_finite_set",
    "evens_language",
    "family_from_config",
    "finite_language",
    "odds_language",
    "pair",
    "registry_oracle",
    "resolve_language",
    "unpair",
]


class Equality(Enum):
    """Three-valued semantic comparison; UNKNOWN is a value, not an error."""

    EQUAL = "equal"
    NOT_EQUAL = "not-equal"
    UNKNOWN = "unknown"


class NotInFamilyError(LookupError):
    """No family index denotes the requested language."""


class IndeterminateError(LookupError):
    """Undecided comparisons below a candidate block the minimality claim."""


def encode_finite_set(artefacts: Iterable[Artefact]) -> int:
    """Bit-set code of a finite artefact set: sum of 2**rank over members."""
    return sum(1 << a.rank for a in artefacts)


def decode_finite_set(code: int, universe: Universe) -> frozenset:
    if code < 0:
        raise ValueError(f"set code must be >= 0, got {code}")
    members = []
    rank = 0
    while code:
        if code & 1:
            members.append(universe.artefact(rank))
        code >>= 1
        rank += 1
    return frozenset(members)


def pair(x: int, y: int) -> int:
    """Cantor pairing, a bijection between pairs of naturals and naturals."""
    return (x + y) * (x + y + 1) // 2 + y


def unpair(n: int) -> tuple[int, int]:
    w = (math.isqrt(8 * n + 1) - 1) // 2
    y = n - w * (w + 1) // 2
    return w - y, y


@dataclass(frozen=True, eq=False)
class LanguageRepr:
    """A language as a decidable membership test plus a canonical enumeration.

    ``element(k)`` is the k-th member in canonical order, or None past the end
    of a finite language. ``size`` is None for declared-infinite languages,
    which carry a ``label`` naming their identity.
    """

    contains: Callable[[Artefact], bool]
    element: Callable[[int], Artefact | None]
    size: int | None
    label: str | None = None

    def finite_members(self) -> frozenset | None:
        if self.size is None:
            return None
        return frozenset(self.element(k) for k in range(self.size))

    def describe(self) -> str:
        if self.label is not None:
            return self.label
        members = sorted(self.finite_members(), key=lambda a: a.rank)
        return "{" + ",".join(a.token for a in members) + "}"


def finite_language(universe: Universe, artefacts: Iterable[Artefact]) -> LanguageRepr:
    members = frozenset(artefacts)
    ordered = tuple(sorted(members, key=lambda a: a.rank))
    return LanguageRepr(
        contains=lambda a: a in members,
        element=lambda k: ordered[k] if 0 <= k < len(ordered) else None,
        size=len(ordered),
    )


def evens_language(universe: Universe) -> LanguageRepr:
    # Positive even ranks only: 2, 4, 6, ...
    return LanguageRepr(
        contains=lambda a: a.rank > 0 and a.rank % 2 == 0,
        element=lambda k: universe.artefact(2 * (k + 1)),
        size=None,
        label="evens",
    )


def odds_language(universe: Universe) -> LanguageRepr:
    return LanguageRepr(
        contains=lambda a: a.rank % 2 == 1,
        element=lambda k: universe.artefact(2 * k + 1),
        size=None,
        label="odds",
    )


def all_language(universe: Universe) -> LanguageRepr:
    return LanguageRepr(
        contains=lambda a: True,
        element=universe.artefact,
        size=None,
        label="all",
    )


LANGUAGES: dict[str, Callable[[Universe], LanguageRepr]] = {
    "evens": evens_language,
    "odds": odds_language,
    "all": all_language,
}


Oracle = Mapping[frozenset, Equality]


def registry_oracle() -> dict[frozenset, Equality]:
    """Pairwise distinctness facts for the registered special languages."""
    names = sorted(LANGUAGES)
    facts: dict[frozenset, Equality] = {}
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            facts[frozenset({a, b})] = Equality.NOT_EQUAL
    return facts


def compare_languages(
    a: LanguageRepr, b: LanguageRepr, oracle: Oracle | None = None
) -> Equality:
    """Sound three-valued equality: EQUAL and NOT_EQUAL answers are decisive."""
    if a is b:
        return Equality.EQUAL
    if a.size is not None and b.size is not None:
        if a.finite_members() == b.finite_members():
            return Equality.EQUAL
        return Equality.NOT_EQUAL
    if (a.size is None) != (b.size is None):
        return Equality.NOT_EQUAL
    if a.label is not None and b.label is not None:
        if a.label == b.label:
            return Equality.EQUAL
        if oracle is not None:
            verdict = oracle.get(frozenset({a.label, b.label}))
            if verdict is not None:
                return verdict
    return Equality.UNKNOWN


@dataclass(frozen=True, eq=False)
class LanguageFamily:
    """Roster of specials followed by the canonical finite-set tail.

    Index p < len(specials) names the p-th special; index len(specials) + n
    names the finite set with bit-set code n. Every natural is a valid index.
    """

    universe: Universe
    specials: tuple = ()
    oracle: Oracle | None = None

    @property
    def offset(self) -> int:
        return len(self.specials)

    def language_of(self, p: int) -> LanguageRepr:
        if p < 0:
            raise ValueError(f"hypothesis index must be >= 0, got {p}")
        if p < self.offset:
            return self.specials[p]
        return finite_language(
            self.universe, decode_finite_set(p - self.offset, self.universe)
        )

    def finite_index(self, artefacts: Iterable[Artefact]) -> int:
        """Index of a finite language in the tail (ignoring duplicate specials)."""
        return self.offset + encode_finite_set(frozenset(artefacts))

    def semantic_equals(self, p: int, q: int) -> Equality:
        if p == q:
            return Equality.EQUAL
        return compare_languages(self.language_of(p), self.language_of(q), self.oracle)

    def compare_index_with(self, p: int, target: LanguageRepr) -> Equality:
        return compare_languages(self.language_of(p), target, self.oracle)

    def min_index_for(self, target: LanguageRepr) -> int:
        """Least index denoting ``target``.

        Raises NotInFamilyError when no index compares EQUAL, and
        IndeterminateError when an UNKNOWN comparison sits below the best
        candidate, leaving minimality uncertifiable.
        """
        best: int | None = None
        unknown_below: list[int] = []
        for p, special in enumerate(self.specials):
            verdict = compare_languages(special, target, self.oracle)
            if verdict is Equality.EQUAL:
                best = p
                break
            if verdict is Equality.UNKNOWN:
                unknown_below.append(p)
        if best is None and target.size is not None:
            best = self.offset + encode_finite_set(target.finite_members())
        if best is None:
            raise NotInFamilyError(
                f"no index denotes {target.describe()} in this family"
            )
        if any(u < best for u in unknown_below):
            raise IndeterminateError(
                f"equality with index {unknown_below[0]} is undecided below "
                f"candidate {best}"
            )
        return best

    def describe_index(self, p: int) -> str:
        return self.language_of(p).describe()

    def tail_set_literal(self, p: int) -> str | None:
        """Decoded set literal when the index falls in the finite-set tail."""
        if p < self.offset:
            return None
        return self.language_of(p).describe()


@dataclass(frozen=True, eq=False)
class AnnotationFamily:
    """Pairs an annotation counter onto a base family's indices.

    Index pair(b, k) denotes exactly what b denotes in the base family, so
    annotated conjectures can churn syntactically while holding one language.
    """

    base: LanguageFamily

    @property
    def universe(self) -> Universe:
        return self.base.universe

    @property
    def oracle(self) -> Oracle | None:
        return self.base.oracle

    def language_of(self, p: int) -> LanguageRepr:
        if p < 0:
            raise ValueError(f"hypothesis index must be >= 0, got {p}")
        return self.base.language_of(unpair(p)[0])

    def semantic_equals(self, p: int, q: int) -> Equality:
        if p == q:
            return Equality.EQUAL
        return compare_languages(self.language_of(p), self.language_of(q), self.oracle)

    def compare_index_with(self, p: int, target: LanguageRepr) -> Equality:
        return compare_languages(self.language_of(p), target, self.oracle)

    def describe_index(self, p: int) -> str:
        base_index, note = unpair(p)
        return f"{self.base.describe_index(base_index)}+note{note}"

    def tail_set_literal(self, p: int) -> str | None:
        return self.base.tail_set_literal(unpair(p)[0])


def resolve_language(spec: str, universe: Universe) -> LanguageRepr:
    """Parse a language spec: a registry name or a finite literal like {2,4}."""
    s = spec.strip()
    if s.startswith("{") and s.endswith("}"):
        inner = s[1:-1].strip()
        tokens = [t.strip() for t in inner.split(",") if t.strip()] if inner else []
        return finite_language(universe, (universe.parse(t) for t in tokens))
    if s in LANGUAGES:
        return LANGUAGES[s](universe)
    raise ValueError(f"unknown language: {spec!r}")


def family_from_config(config: Mapping) -> LanguageFamily:
    """Build a family from a declarative descriptor.

    Keys: ``universe`` (registry name, default "decimal"), ``specials``
    (ordered registry names), ``registry_oracle`` (bool, default True:
    install the shipped distinctness facts for registered specials).
    """
    universe_name = config.get("universe", "decimal")
    if universe_name not in UNIVERSES:
        raise ValueError(f"unknown universe: {universe_name!r}")
    universe = UNIVERSES[universe_name]()
    specials = []
    for name in config.get("specials", ()):
        if name not in LANGUAGES:
            raise ValueError(f"unknown special language: {name!r}")
        specials.append(LANGUAGES[name](universe))
    oracle = registry_oracle() if config.get("registry_oracle", True) else None
    return LanguageFamily(universe, tuple(specials), oracle)
