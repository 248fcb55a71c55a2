"""Artefact universes, experiences, and deterministic text (fate) generators.

A universe fixes a bijective enumeration of every artefact that can ever
occur. Experiences are finite datum sequences, fates are total generators of
infinite datum sequences, and the text strategies build fates that list a
language exhaustively with configurable pause, order, and repetition texture.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from itertools import islice
from typing import TYPE_CHECKING, Callable, Iterable, Iterator

if TYPE_CHECKING:
    from .families import LanguageRepr

__all__ = [
    "PAUSE",
    "Artefact",
    "Canonical",
    "Datum",
    "Experience",
    "Fate",
    "InspiringSet",
    "Padded",
    "Pause",
    "RepetitionHeavy",
    "ShuffledWindow",
    "TextStrategy",
    "UNIVERSES",
    "Universe",
    "canonical_experience",
    "decimal_universe",
    "derived_rng",
    "experience_from_tokens",
    "experience_to_tokens",
    "fate_from_function",
    "is_pause",
    "letters_universe",
    "make_fate",
]


@dataclass(frozen=True)
class Pause:
    """The null datum: a text step that carries no artefact."""

    def __repr__(self) -> str:
        return "#"


PAUSE = Pause()


@dataclass(frozen=True)
class Artefact:
    """One member of the universe, identified by its token and its rank."""

    token: str
    rank: int

    def __repr__(self) -> str:
        return f"Artefact({self.token})"


Datum = Artefact | Pause

# Inspiring sets are plain frozensets of artefacts: duplicate-free,
# pause-free by construction, order-insensitive equality for free.
InspiringSet = frozenset


def is_pause(d: Datum) -> bool:
    return isinstance(d, Pause)


@dataclass(frozen=True)
class Universe:
    """A fixed bijective enumeration of all possible artefact tokens.

    ``to_token`` and ``from_token`` must be mutually inverse over the
    naturals; "#" is reserved for the pause and is never a valid token.
    """

    name: str
    to_token: Callable[[int], str]
    from_token: Callable[[str], int]

    def artefact(self, rank: int) -> Artefact:
        if rank < 0:
            raise ValueError(f"universe rank must be >= 0, got {rank}")
        return Artefact(self.to_token(rank), rank)

    def parse(self, token: str) -> Artefact:
        return Artefact(token, self.from_token(token))


def decimal_universe() -> Universe:
    """Universe whose tokens are the decimal numerals 0, 1, 2, ..."""

    def from_token(token: str) -> int:
        if not token.isdigit() or (len(token) > 1 and token[0] == "0"):
            raise ValueError(f"not a decimal numeral: {token!r}")
        return int(token)

    return Universe("decimal", str, from_token)


def letters_universe() -> Universe:
    """Universe whose tokens count through a, b, ..., z, aa, ab, ... bijectively."""

    def to_token(rank: int) -> str:
        n = rank + 1
        out = []
        while n:
            n, r = divmod(n - 1, 26)
            out.append(chr(ord("a") + r))
        return "".join(reversed(out))

    def from_token(token: str) -> int:
        if not token or not all("a" <= c <= "z" for c in token):
            raise ValueError(f"not a letter token: {token!r}")
        n = 0
        for c in token:
            n = n * 26 + (ord(c) - ord("a") + 1)
        return n - 1

    return Universe("letters", to_token, from_token)


UNIVERSES: dict[str, Callable[[], Universe]] = {
    "decimal": decimal_universe,
    "letters": letters_universe,
}


@dataclass(frozen=True)
class Experience:
    """A finite ordered record of data: everything a scientist has seen so far."""

    items: tuple = ()

    @classmethod
    def of(cls, *data: Datum) -> Experience:
        return cls(tuple(data))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Experience(self.items[index])
        return self.items[index]

    def __add__(self, other: Experience) -> Experience:
        return Experience(self.items + other.items)

    def append(self, d: Datum) -> Experience:
        return Experience(self.items + (d,))

    def content(self) -> frozenset:
        """The inspiring set: artefacts seen, pauses dropped, duplicates collapsed."""
        return frozenset(d for d in self.items if not is_pause(d))

    def __repr__(self) -> str:
        inner = " ".join("#" if is_pause(d) else d.token for d in self.items)
        return f"Experience({inner})"


def canonical_experience(artefacts: Iterable[Artefact]) -> Experience:
    """List a set of artefacts once each, sorted by universe rank, no pauses."""
    return Experience(tuple(sorted(artefacts, key=lambda a: a.rank)))


def experience_to_tokens(sigma: Experience) -> list[str]:
    """JSON-ready form: a list of tokens with "#" standing for the pause."""
    return ["#" if is_pause(d) else d.token for d in sigma]


def experience_from_tokens(tokens: Iterable[str], universe: Universe) -> Experience:
    return Experience(
        tuple(PAUSE if t == "#" else universe.parse(t) for t in tokens)
    )


@dataclass(frozen=True, eq=False)
class Fate:
    """A total deterministic source of one infinite datum sequence.

    ``stream_factory`` returns a fresh infinite iterator on every call, so
    repeated reads of the same index always agree and fates stay observably
    pure without shared mutable state. ``descriptor`` is the serializable
    (language, strategy, seed) summary; the sequence itself is never stored.
    """

    stream_factory: Callable[[], Iterator[Datum]]
    platonic: "LanguageRepr | None" = None
    descriptor: dict | None = None

    def at(self, n: int) -> Datum:
        if n < 0:
            raise ValueError(f"text index must be >= 0, got {n}")
        return next(islice(self.stream_factory(), n, None))

    def prefix(self, n: int) -> Experience:
        if n < 0:
            raise ValueError(f"prefix length must be >= 0, got {n}")
        return Experience(tuple(islice(self.stream_factory(), n)))


def fate_from_function(
    fn: Callable[[int], Datum],
    platonic: "LanguageRepr | None" = None,
    descriptor: dict | None = None,
) -> Fate:
    """Wrap an explicit index-to-datum function as a fate."""

    def factory() -> Iterator[Datum]:
        n = 0
        while True:
            yield fn(n)
            n += 1

    return Fate(factory, platonic, descriptor)


def derived_rng(*parts) -> random.Random:
    """Deterministic, platform-independent RNG keyed by the given parts."""
    key = ":".join(str(p) for p in parts).encode()
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


@dataclass(frozen=True)
class Canonical:
    """Elements in canonical order; nonempty finite languages cycle forever."""

    def __str__(self) -> str:
        return "canonical"


@dataclass(frozen=True)
class Padded:
    """Canonical order with pauses mixed in at a fixed density per block."""

    pause_density: float = 0.25

    def __post_init__(self) -> None:
        if not 0.0 <= self.pause_density < 1.0:
            raise ValueError(
                f"pause density must lie in [0, 1), got {self.pause_density}"
            )

    def __str__(self) -> str:
        return f"padded({self.pause_density})"


@dataclass(frozen=True)
class ShuffledWindow:
    """Canonical order permuted within consecutive windows of fixed size."""

    window: int = 4

    def __post_init__(self) -> None:
        if self.window < 1:
            raise ValueError(f"window size must be >= 1, got {self.window}")

    def __str__(self) -> str:
        return f"shuffled-window({self.window})"


@dataclass(frozen=True)
class RepetitionHeavy:
    """Canonical order with elements repeated up to twice extra at a fixed rate."""

    repeat_rate: float = 0.25

    def __post_init__(self) -> None:
        if not 0.0 <= self.repeat_rate < 1.0:
            raise ValueError(
                f"repeat rate must lie in [0, 1), got {self.repeat_rate}"
            )

    def __str__(self) -> str:
        return f"repetition-heavy({self.repeat_rate})"


TextStrategy = Canonical | Padded | ShuffledWindow | RepetitionHeavy

_PAD_BLOCK = 8  # slots per padded block; density resolves to floor(density * 8) pauses


def _element_supply(lang: "LanguageRepr") -> Iterator[Artefact]:
    """Infinite canonical element stream; empty for the empty language.

    Nonempty finite languages cycle so the stream never runs dry and every
    element keeps reappearing, as in any fair infinite text.
    """
    size = lang.size
    if size == 0:
        return
    k = 0
    while True:
        yield lang.element(k if size is None else k % size)
        k += 1


def _canonical_stream(lang: "LanguageRepr") -> Iterator[Datum]:
    yield from _element_supply(lang)
    while True:
        yield PAUSE


def _padded_stream(lang: "LanguageRepr", density: float, seed: int) -> Iterator[Datum]:
    supply = _element_supply(lang)
    pauses_per_block = int(density * _PAD_BLOCK)
    block = 0
    while True:
        rng = derived_rng("padded", seed, block)
        pause_slots = set(rng.sample(range(_PAD_BLOCK), pauses_per_block))
        for slot in range(_PAD_BLOCK):
            if slot in pause_slots:
                yield PAUSE
            else:
                nxt = next(supply, None)
                yield PAUSE if nxt is None else nxt
        block += 1


def _window_stream(lang: "LanguageRepr", window: int, seed: int) -> Iterator[Datum]:
    supply = _element_supply(lang)
    block = 0
    while True:
        chunk = list(islice(supply, window))
        if not chunk:
            while True:
                yield PAUSE
        rng = derived_rng("window", seed, block)
        rng.shuffle(chunk)
        yield from chunk
        block += 1


def _repetition_stream(lang: "LanguageRepr", rate: float, seed: int) -> Iterator[Datum]:
    k = 0
    for a in _element_supply(lang):
        rng = derived_rng("repeat", seed, k)
        reps = 1 + (rng.random() < rate) + (rng.random() < rate)
        for _ in range(reps):
            yield a
        k += 1
    while True:
        yield PAUSE


def make_fate(lang: "LanguageRepr", strategy: TextStrategy, seed: int = 0) -> Fate:
    """Build the deterministic fate for ``lang`` under a text strategy.

    The k-th canonical element of the language is guaranteed to appear by a
    computable deadline (dovetailing), so the limiting content of the fate
    equals the language; the empty language yields the all-pause fate under
    every strategy.
    """
    if isinstance(strategy, Canonical):
        factory = lambda: _canonical_stream(lang)
    elif isinstance(strategy, Padded):
        factory = lambda: _padded_stream(lang, strategy.pause_density, seed)
    elif isinstance(strategy, ShuffledWindow):
        factory = lambda: _window_stream(lang, strategy.window, seed)
    elif isinstance(strategy, RepetitionHeavy):
        factory = lambda: _repetition_stream(lang, strategy.repeat_rate, seed)
    else:
        raise TypeError(f"unknown text strategy: {strategy!r}")
    descriptor = {
        "language": lang.describe(),
        "strategy": str(strategy),
        "seed": seed,
    }
    return Fate(factory, platonic=lang, descriptor=descriptor)
