"""The even-part exchange on two-color partitions.

One application trades material between the even parts and the two-modular
diagram of the odd parts: either the longest all-square strip is cut out
and its doubled length joins the evens as a new largest part, or the
largest even part is cut into squares and pushed back into the diagram.
Strip orientation follows the majority color (columns when greens dominate,
rows otherwise), so the green/blue count difference is untouched while the
even-part count changes by exactly one.

Applying the exchange twice returns the original partition.  The only
inputs it cannot act on are the two single-color staircases (2k-1, ..., 3, 1)
with no even parts, whose diagrams have no all-square strip at all, and the
empty partition as the degenerate k = 0 case.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagram import (
    COLUMN,
    ROW,
    MalformedDiagram,
    StripReport,
    build_diagram,
    far_edge_position,
    insert_strip,
    longest_all_square_strip,
    merge_adjoined,
    remove_strip,
    split_and_read,
)
from .partitions import TwoColorPartition

EVENS_GREW = "evens_grew"
EVENS_SHRANK = "evens_shrank"


class ExceptionalPartition(ValueError):
    """The transformation is not applicable to this partition."""


def staircase(k: int) -> tuple[int, ...]:
    """The descending odd run (2k-1, ..., 3, 1); its weight is k*k."""
    if k < 0:
        raise ValueError("staircase size must be nonnegative")
    return tuple(range(2 * k - 1, 0, -2))


def is_exceptional(p: TwoColorPartition) -> bool:
    """True for the two single-color staircases with no even parts, and for
    the empty partition (the degenerate staircase of size zero)."""
    if p.evens:
        return False
    if p.greens and p.blues:
        return False
    single = p.greens or p.blues
    return single == staircase(len(single))


@dataclass(frozen=True)
class TransformOutcome:
    """Result of one application: the image, the strip acted on, and which
    way the even-part count moved."""

    result: TwoColorPartition
    strip: StripReport
    direction: str

    def to_dict(self) -> dict:
        return {
            "result": self.result.to_dict(),
            "strip": self.strip.to_dict(),
            "direction": self.direction,
        }


def transform(p: TwoColorPartition) -> TransformOutcome:
    """Apply the even-part exchange to a non-exceptional partition.

    Raises :class:`ExceptionalPartition` on the staircases and the empty
    partition; :class:`MalformedDiagram` only on internal rule violations,
    which a valid input never triggers.
    """
    if is_exceptional(p):
        raise ExceptionalPartition(f"transformation not applicable to {_describe(p)}")
    orientation = COLUMN if len(p.greens) > len(p.blues) else ROW
    dia = merge_adjoined(build_diagram(p.greens, p.blues))
    located = longest_all_square_strip(dia, orientation)
    top = p.evens[0] if p.evens else 0
    if 2 * located.length > top:
        edited = remove_strip(dia, orientation, located.position)
        evens = (2 * located.length,) + p.evens
        strip = replace(located, action="removed")
        direction = EVENS_GREW
    elif located.length > 0:
        edited = insert_strip(dia, orientation, located.position, top // 2)
        evens = p.evens[1:]
        strip = replace(located, action="inserted")
        direction = EVENS_SHRANK
    else:
        position = far_edge_position(dia, orientation)
        edited = insert_strip(dia, orientation, position, top // 2)
        evens = p.evens[1:]
        strip = StripReport(orientation, 0, position, action="far_edge_inserted")
        direction = EVENS_SHRANK
    greens, blues = split_and_read(edited)
    result = TwoColorPartition(evens, greens, blues)
    _check_outcome(p, result)
    return TransformOutcome(result=result, strip=strip, direction=direction)


def _check_outcome(p: TwoColorPartition, result: TwoColorPartition) -> None:
    if result.weight != p.weight:
        raise MalformedDiagram(f"weight changed from {p.weight} to {result.weight}")
    if (len(result.evens) - len(p.evens)) % 2 == 0:
        raise MalformedDiagram("even-part count parity did not flip")
    if len(result.greens) - len(result.blues) != len(p.greens) - len(p.blues):
        raise MalformedDiagram("green/blue count difference changed")


def _describe(p: TwoColorPartition) -> str:
    if p.greens:
        return f"the green staircase {p.greens}"
    if p.blues:
        return f"the blue staircase {p.blues}"
    return "the empty partition"
