"""Counting solutions of ``s = d . x`` over nonnegative integers."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

__all__ = [
    "GeneratorVector",
    "SignedTerm",
    "denumerant_table",
    "denumerant",
    "brute_force_count",
    "normalize_signed",
    "eval_signed_term",
]


class GeneratorVector(tuple):
    """Positive integer generators ``d_1..d_m``; duplicates allowed."""

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(x) for x in entries)
        if not entries:
            raise ValueError("a generator vector needs at least one entry")
        if any(x < 1 for x in entries):
            raise ValueError(f"generators must be positive integers, got {entries}")
        return super().__new__(cls, entries)

    @property
    def m(self) -> int:
        return len(self)

    def sigma(self, r: int = 1) -> int:
        """Power sum of the generators."""
        return sum(x**r for x in self)

    @property
    def product(self) -> int:
        return prod(self)

    def without(self, i: int) -> tuple[int, ...]:
        return self[:i] + self[i + 1:]

    def __repr__(self) -> str:
        return f"GeneratorVector({list(self)})"


def denumerant_table(d: Sequence[int], s_max: int) -> list[int]:
    """Counts for every ``0 <= s <= s_max`` via the coin-change recurrence."""
    if s_max < 0:
        raise ValueError("s_max must be >= 0")
    d = GeneratorVector(d)
    table = [0] * (s_max + 1)
    table[0] = 1
    for g in d:
        for s in range(g, s_max + 1):
            table[s] += table[s - g]
    return table


_cache: dict[tuple[int, ...], list[int]] = {}
_cache_lock = threading.Lock()


def _cached_table(key: tuple[int, ...], s: int) -> list[int]:
    table = _cache.get(key)
    if table is not None and len(table) > s:
        return table
    size = max(2 * s, 64)
    table = denumerant_table(key, size)
    with _cache_lock:
        old = _cache.get(key)
        if old is None or len(old) < len(table):
            _cache[key] = table
    return table


def denumerant(s: int, d: Sequence[int]) -> int:
    """Number of partitions of ``s`` into parts from ``d``; zero for ``s < 0``."""
    if s < 0:
        return 0
    key = tuple(sorted(GeneratorVector(d)))
    return _cached_table(key, s)[s]


def brute_force_count(s: int, d: Sequence[int]) -> int:
    """Exhaustive enumeration; only for small ``s`` and short ``d``."""
    if s < 0:
        return 0
    d = GeneratorVector(d)
    *head, last = d

    def walk(i: int, rest: int) -> int:
        if i == len(head):
            return 1 if rest % last == 0 else 0
        g = head[i]
        return sum(walk(i + 1, rest - g * x) for x in range(rest // g + 1))

    return walk(0, s)


@dataclass(frozen=True)
class SignedTerm:
    """A partition term ``W(s*delta, raw)`` rewritten over positive generators.

    ``W(s*delta, raw) == sign * W(s*delta + shift, abs_generators)``.
    """

    raw_generators: tuple[int, ...]
    s_multiplier: int
    sign: int
    shift: int
    abs_generators: GeneratorVector

    def __post_init__(self):
        negatives = [x for x in self.raw_generators if x < 0]
        if (
            self.sign != (-1) ** len(negatives)
            or self.shift != sum(negatives)
            or tuple(self.abs_generators) != tuple(abs(x) for x in self.raw_generators)
        ):
            raise ValueError("sign/shift/abs_generators inconsistent with raw generators")

    @property
    def m(self) -> int:
        return len(self.raw_generators)


def normalize_signed(raw: Sequence[int], delta: int = 1) -> SignedTerm:
    raw = tuple(int(x) for x in raw)
    if not raw:
        raise ValueError("empty generator vector")
    if any(x == 0 for x in raw):
        raise ValueError(f"zero generator in {raw}")
    if delta < 1:
        raise ValueError("s multiplier must be positive")
    negatives = [x for x in raw if x < 0]
    return SignedTerm(
        raw_generators=raw,
        s_multiplier=int(delta),
        sign=(-1) ** len(negatives),
        shift=sum(negatives),
        abs_generators=GeneratorVector(abs(x) for x in raw),
    )


def eval_signed_term(s: int, t: SignedTerm) -> int:
    if s < 0:
        raise ValueError("s must be >= 0")
    return t.sign * denumerant(s * t.s_multiplier + t.shift, t.abs_generators)
