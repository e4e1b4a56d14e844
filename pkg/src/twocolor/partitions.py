"""Two-color partitions with distinct parts and overpartitions into odd parts.

The central family consists of partitions whose parts carry a color, green
or blue, with all (value, color) pairs distinct and even values allowed in
blue only.  An element is normalized into three strictly decreasing
sequences: even blue parts, odd green parts, odd blue parts.  The companion
family consists of overpartitions into odd parts: a set of overlined odd
parts plus a multiset of plain odd parts.

Enumeration is exhaustive and deterministic.  Elements are emitted in
descending lexicographic order of the field triple (evens, greens, blues),
respectively of the pair (overlined, plain), so output is reproducible
across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Iterator

#: refuse enumerations beyond this weight (desk-scale guard)
MAX_WEIGHT = 10**6

EVEN = "even"
ODD = "odd"


class InvalidPartition(ValueError):
    """A part sequence violates one of the type invariants."""


class InvalidInput(InvalidPartition):
    """External (JSON) input is malformed; the message names the violated invariant."""


def _validated(name: str, parts, parity: int | None = None, strict: bool = True) -> tuple[int, ...]:
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool):
            raise InvalidPartition(f"{name} entries must be integers")
        if p < 1:
            raise InvalidPartition(f"{name} entries must be positive")
        if parity is not None and p % 2 != parity:
            raise InvalidPartition(f"{name} entries must be {ODD if parity else EVEN}")
    for a, b in zip(parts, parts[1:]):
        if a < b or (strict and a == b):
            order = "strictly" if strict else "weakly"
            raise InvalidPartition(f"{name} must be {order} decreasing")
    return parts


@dataclass(frozen=True)
class TwoColorPartition:
    """A two-color partition with distinct parts, even parts blue only.

    ``evens`` holds the even (blue) parts, ``greens`` and ``blues`` the odd
    parts of each color.  Every field is strictly decreasing; the same odd
    value may appear once in ``greens`` and once in ``blues``.
    """

    evens: tuple[int, ...] = ()
    greens: tuple[int, ...] = ()
    blues: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "evens", _validated("evens", self.evens, parity=0))
        object.__setattr__(self, "greens", _validated("greens", self.greens, parity=1))
        object.__setattr__(self, "blues", _validated("blues", self.blues, parity=1))

    @property
    def weight(self) -> int:
        return sum(self.evens) + sum(self.greens) + sum(self.blues)

    @property
    def num_parts(self) -> int:
        return len(self.evens) + len(self.greens) + len(self.blues)

    @property
    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        return (self.evens, self.greens, self.blues)

    def to_dict(self) -> dict:
        return {"evens": list(self.evens), "greens": list(self.greens), "blues": list(self.blues)}

    @classmethod
    def from_dict(cls, obj) -> "TwoColorPartition":
        fields = _json_fields(obj, ("evens", "greens", "blues"))
        try:
            return cls(**fields)
        except InvalidPartition as exc:
            raise InvalidInput(str(exc)) from exc


@dataclass(frozen=True)
class OddOverpartition:
    """An overpartition into odd parts: overlined parts are distinct, plain
    parts form a multiset (weakly decreasing)."""

    overlined: tuple[int, ...] = ()
    plain: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "overlined", _validated("overlined", self.overlined, parity=1))
        object.__setattr__(self, "plain", _validated("plain", self.plain, parity=1, strict=False))

    @property
    def weight(self) -> int:
        return sum(self.overlined) + sum(self.plain)

    @property
    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.overlined, self.plain)

    def to_dict(self) -> dict:
        return {"overlined": list(self.overlined), "plain": list(self.plain)}

    @classmethod
    def from_dict(cls, obj) -> "OddOverpartition":
        fields = _json_fields(obj, ("overlined", "plain"))
        try:
            return cls(**fields)
        except InvalidPartition as exc:
            raise InvalidInput(str(exc)) from exc


def _json_fields(obj, keys: tuple[str, ...]) -> dict[str, tuple[int, ...]]:
    if not isinstance(obj, dict):
        raise InvalidInput(f"expected a JSON object with keys {'/'.join(keys)}")
    unknown = sorted(set(obj) - set(keys))
    if unknown:
        raise InvalidInput(f"unknown key {unknown[0]!r} (expected {'/'.join(keys)})")
    fields = {}
    for key in keys:
        value = obj.get(key, [])
        if not isinstance(value, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in value
        ):
            raise InvalidInput(f"{key} must be an array of integers")
        fields[key] = tuple(value)
    return fields


@dataclass(frozen=True)
class ParityClass:
    """Parity of the even-part count and of the total part count."""

    evens_count_parity: str
    total_parts_parity: str


@dataclass(frozen=True)
class SquareWitness:
    """Whether a weight is a perfect square, and its root if so."""

    is_square: bool
    k: int | None = None


def weight(p: TwoColorPartition | OddOverpartition) -> int:
    """Total weight (sum of all parts) of a partition of either kind."""
    return p.weight


def classify(p: TwoColorPartition) -> ParityClass:
    """Parity classification deciding membership in the four count classes."""
    return ParityClass(
        evens_count_parity=EVEN if len(p.evens) % 2 == 0 else ODD,
        total_parts_parity=EVEN if p.num_parts % 2 == 0 else ODD,
    )


def square_witness(n: int) -> SquareWitness:
    _check_weight(n)
    root = isqrt(n)
    return SquareWitness(True, root) if root * root == n else SquareWitness(False)


def _check_weight(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InvalidPartition("weight must be a nonnegative integer")
    if n > MAX_WEIGHT:
        raise InvalidPartition(f"weight {n} exceeds the configured bound {MAX_WEIGHT}")


def _distinct_parts(total: int, cap: int, odd: bool) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing same-parity positive tuples summing to ``total``.

    Descends over the largest part with remaining-weight pruning: once the
    candidates p, p-2, ..., lo cannot reach the total even all together,
    no smaller leading part can either.
    """
    if total == 0:
        yield ()
        return
    lo = 1 if odd else 2
    p = min(cap, total)
    if p % 2 != lo % 2:
        p -= 1
    while p >= lo:
        count = (p - lo) // 2 + 1
        if (p + lo) * count // 2 < total:
            break
        for rest in _distinct_parts(total - p, p - 2, odd):
            yield (p,) + rest
        p -= 2


def _odd_multisets(total: int, cap: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of odd positive parts summing to ``total``."""
    if total == 0:
        yield ()
        return
    p = min(cap, total)
    if p % 2 == 0:
        p -= 1
    while p >= 1:
        for rest in _odd_multisets(total - p, p):
            yield (p,) + rest
        p -= 2


@lru_cache(maxsize=None)
def enumerate_two_color(n: int) -> tuple[TwoColorPartition, ...]:
    """Every two-color partition of ``n`` exactly once, in canonical order.

    Canonical order is descending lexicographic on (evens, greens, blues);
    the result is cached, so treat it as immutable.
    """
    _check_weight(n)
    found = []
    for even_weight in range(0, n + 1, 2):
        for evens in _distinct_parts(even_weight, even_weight, odd=False):
            for green_weight in range(0, n - even_weight + 1):
                blue_weight = n - even_weight - green_weight
                for greens in _distinct_parts(green_weight, green_weight, odd=True):
                    for blues in _distinct_parts(blue_weight, blue_weight, odd=True):
                        found.append(TwoColorPartition(evens, greens, blues))
    found.sort(key=lambda p: p.sort_key, reverse=True)
    return tuple(found)


@lru_cache(maxsize=None)
def enumerate_odd_overpartitions(n: int) -> tuple[OddOverpartition, ...]:
    """Every overpartition of ``n`` into odd parts exactly once.

    Order is descending lexicographic on (overlined, plain); cached.
    """
    _check_weight(n)
    found = []
    for over_weight in range(0, n + 1):
        for overlined in _distinct_parts(over_weight, over_weight, odd=True):
            for plain in _odd_multisets(n - over_weight, n - over_weight):
                found.append(OddOverpartition(overlined, plain))
    found.sort(key=lambda p: p.sort_key, reverse=True)
    return tuple(found)
