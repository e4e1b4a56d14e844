"""Identity verification: per-weight count tables and exhaustive audits.

Everything here is exact integer arithmetic at desk scale.  The count table
checks, for each weight, that the two-color family matches the odd
overpartitions and that the four parity classes differ only at perfect
squares.  The audits replay the supporting constructions element by
element: the even-part exchange must pair the classes off, and the
recoloring map must biject the two families.  Weight 0 is degenerate (the
class difference identities fail there by fiat) and is reported with an
empty check set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .glaisher import overpartition_to_twocolor, twocolor_to_overpartition
from .involution import ExceptionalPartition, is_exceptional, staircase, transform
from .diagram import MalformedDiagram
from .partitions import (
    EVEN,
    SquareWitness,
    TwoColorPartition,
    classify,
    enumerate_odd_overpartitions,
    enumerate_two_color,
    square_witness,
)
from .series import PowerSeries, series_E, series_podd

THEOREM_PARTS = ("a", "b", "c", "d", "e")


@dataclass(frozen=True)
class IdentityReport:
    """One table row: counts, square witness, and per-part pass flags."""

    n: int
    E: int
    E0: int
    E1: int
    E2: int
    E3: int
    p_o_bar: int
    square: SquareWitness
    checks: dict[str, bool]

    @property
    def exempt(self) -> bool:
        return not self.checks

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "E": self.E,
            "E0": self.E0,
            "E1": self.E1,
            "E2": self.E2,
            "E3": self.E3,
            "p_o_bar": self.p_o_bar,
            "is_square": self.square.is_square,
            "k": self.square.k,
            "checks": dict(self.checks),
            "pass": "exempt" if self.exempt else self.passed,
        }


def identity_report(n: int) -> IdentityReport:
    """Count table row for one weight; weight 0 carries no checks."""
    members = enumerate_two_color(n)
    total = len(members)
    e0 = sum(1 for p in members if classify(p).evens_count_parity == EVEN)
    e2 = sum(1 for p in members if classify(p).total_parts_parity == EVEN)
    e1, e3 = total - e0, total - e2
    p_o_bar = len(enumerate_odd_overpartitions(n))
    square = square_witness(n)
    if n == 0:
        checks: dict[str, bool] = {}
    else:
        # doubled forms keep everything in integers even when p_o_bar is odd
        bonus = 2 if square.is_square else 0
        signed = 2 * (-1) ** n if square.is_square else 0
        checks = {
            "a": total == p_o_bar,
            "b": 2 * e0 == p_o_bar + bonus,
            "c": 2 * e1 == p_o_bar - bonus,
            "d": 2 * e2 == p_o_bar + signed,
            "e": 2 * e3 == p_o_bar - signed,
        }
    return IdentityReport(n, total, e0, e1, e2, e3, p_o_bar, square, checks)


def verify_theorem(n_max: int) -> tuple[IdentityReport, ...]:
    """Identity reports for every weight 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return tuple(identity_report(n) for n in range(1, n_max + 1))


def format_table(reports, fmt: str = "csv") -> str:
    """Render reports as csv, json, or a markdown table."""
    reports = list(reports)
    if fmt == "csv":
        lines = ["n,E,E0,E1,E2,E3,p_o_bar,is_square,pass"]
        for r in reports:
            lines.append(
                f"{r.n},{r.E},{r.E0},{r.E1},{r.E2},{r.E3},{r.p_o_bar},"
                f"{str(r.square.is_square).lower()},{_pass_cell(r)}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
    if fmt == "md":
        lines = [
            "| n | E | E0 | E1 | E2 | E3 | p_o_bar | is_square | pass |",
            "| --- | --- | --- | --- | --- | --- | --- | --- | --- |",
        ]
        for r in reports:
            lines.append(
                f"| {r.n} | {r.E} | {r.E0} | {r.E1} | {r.E2} | {r.E3} | {r.p_o_bar} "
                f"| {str(r.square.is_square).lower()} | {_pass_cell(r)} |"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"table format must be csv, json, or md, got {fmt!r}")


def _pass_cell(report: IdentityReport) -> str:
    return "exempt" if report.exempt else str(report.passed).lower()


@dataclass(frozen=True)
class InvolutionAudit:
    """Element-by-element replay of the even-part exchange at one weight."""

    n: int
    population: int
    orbit_count: int
    exceptional: tuple[TwoColorPartition, ...]
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_involution(n: int) -> InvolutionAudit:
    """Check the exchange pairs off all non-exceptional partitions of ``n``.

    Verifies the involution and no-fixed-point properties, weight
    preservation, the even-count parity flip, the green/blue difference
    invariance, that each orbit spans both parity classes of each kind, and
    the exceptional census (the two staircases exactly at square weights).
    """
    members = enumerate_two_color(n)
    failures: list[str] = []
    exceptional = tuple(p for p in members if is_exceptional(p))
    paired: set[TwoColorPartition] = set()
    orbit_count = 0
    for p in members:
        if is_exceptional(p) or p in paired:
            continue
        try:
            image = transform(p).result
            back = transform(image).result
        except (ExceptionalPartition, MalformedDiagram) as exc:
            failures.append(f"n={n}: transform failed on {p}: {exc}")
            continue
        if image == p:
            failures.append(f"n={n}: fixed point at {p}")
        if back != p:
            failures.append(f"n={n}: not an involution at {p} (came back as {back})")
        if image.weight != n:
            failures.append(f"n={n}: weight changed at {p}")
        if (len(image.evens) - len(p.evens)) % 2 == 0:
            failures.append(f"n={n}: even-count parity not flipped at {p}")
        if len(image.greens) - len(image.blues) != len(p.greens) - len(p.blues):
            failures.append(f"n={n}: green/blue difference changed at {p}")
        mine, theirs = classify(p), classify(image)
        if mine.evens_count_parity == theirs.evens_count_parity:
            failures.append(f"n={n}: orbit of {p} does not span both even-count classes")
        if mine.total_parts_parity == theirs.total_parts_parity:
            failures.append(f"n={n}: orbit of {p} does not span both part-count classes")
        paired.add(p)
        paired.add(image)
        orbit_count += 1
    expected = _expected_exceptional(n)
    if set(exceptional) != expected:
        failures.append(
            f"n={n}: exceptional census {sorted(p.sort_key for p in exceptional)} != "
            f"expected {sorted(p.sort_key for p in expected)}"
        )
    if 2 * orbit_count + len(exceptional) != len(members):
        failures.append(f"n={n}: orbits and exceptions do not cover the family")
    return InvolutionAudit(n, len(members), orbit_count, exceptional, tuple(failures))


def _expected_exceptional(n: int) -> set[TwoColorPartition]:
    if n == 0:
        return {TwoColorPartition()}
    square = square_witness(n)
    if not square.is_square:
        return set()
    steps = staircase(square.k)
    return {TwoColorPartition(greens=steps), TwoColorPartition(blues=steps)}


@dataclass(frozen=True)
class BijectionAudit:
    """Round-trip and image audit of the recoloring map at one weight."""

    n: int
    overpartition_count: int
    two_color_count: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_bijection(n: int) -> BijectionAudit:
    """Check the overpartition map is a bijection onto the two-color family."""
    sources = enumerate_odd_overpartitions(n)
    targets = enumerate_two_color(n)
    failures: list[str] = []
    images = []
    for op in sources:
        image = overpartition_to_twocolor(op)
        if image.weight != n:
            failures.append(f"n={n}: weight changed mapping {op}")
        if twocolor_to_overpartition(image) != op:
            failures.append(f"n={n}: round trip failed at {op}")
        images.append(image)
    if len(set(images)) != len(images):
        failures.append(f"n={n}: map is not injective")
    if set(images) != set(targets):
        failures.append(f"n={n}: image does not equal the two-color family")
    for p in targets:
        if overpartition_to_twocolor(twocolor_to_overpartition(p)) != p:
            failures.append(f"n={n}: reverse round trip failed at {p}")
    return BijectionAudit(n, len(sources), len(targets), tuple(failures))


@dataclass(frozen=True)
class SeriesAudit:
    """Agreement of the two counting series with each other and with
    enumeration."""

    depth: int
    enumeration_limit: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_series(depth: int = 200, enumeration_limit: int = 40) -> SeriesAudit:
    """Cross-check both product series and the exhaustive enumerators."""
    two_color: PowerSeries = series_E(depth)
    odd_over: PowerSeries = series_podd(depth)
    failures: list[str] = []
    for n in range(depth + 1):
        if two_color[n] != odd_over[n]:
            failures.append(f"series disagree at q^{n}: {two_color[n]} != {odd_over[n]}")
    for n in range(min(depth, enumeration_limit) + 1):
        if two_color[n] != len(enumerate_two_color(n)):
            failures.append(f"series != enumeration for two-color at n={n}")
        if odd_over[n] != len(enumerate_odd_overpartitions(n)):
            failures.append(f"series != enumeration for overpartitions at n={n}")
    return SeriesAudit(depth, enumeration_limit, tuple(failures))
