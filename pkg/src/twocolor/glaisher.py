"""The classical odd/distinct bijection and the overpartition correspondence.

Glaisher's map realizes Euler's theorem constructively: a multiset of odd
parts becomes a set of distinct parts by writing each multiplicity in
binary, and the inverse strips powers of two.  Composed with the recoloring
of overlined parts it carries overpartitions into odd parts onto two-color
partitions of the same weight.
"""

from __future__ import annotations

from collections import Counter

from .partitions import InvalidPartition, OddOverpartition, TwoColorPartition, _validated


def glaisher_split(odd_parts) -> tuple[int, ...]:
    """Map odd parts, with repetition, to distinct parts of the same weight.

    Each odd value m with multiplicity mu = sum(2**e) contributes the parts
    m * 2**e, one per binary digit of mu.
    """
    odd_parts = _validated("odd parts", odd_parts, parity=1, strict=False)
    out = []
    for m, mult in Counter(odd_parts).items():
        exponent = 0
        while mult:
            if mult & 1:
                out.append(m << exponent)
            mult >>= 1
            exponent += 1
    return tuple(sorted(out, reverse=True))


def glaisher_merge(distinct_parts) -> tuple[int, ...]:
    """Inverse of :func:`glaisher_split`: each part d = m * 2**e with m odd
    becomes 2**e copies of m."""
    distinct_parts = _validated("distinct parts", distinct_parts)
    out = []
    for d in distinct_parts:
        copies = 1
        while d % 2 == 0:
            d //= 2
            copies *= 2
        out.extend([d] * copies)
    return tuple(sorted(out, reverse=True))


def overpartition_to_twocolor(op: OddOverpartition) -> TwoColorPartition:
    """Overlined parts turn green; plain parts split into distinct blue
    parts, separated by parity into the even and odd blue sequences."""
    distinct = glaisher_split(op.plain)
    evens = tuple(d for d in distinct if d % 2 == 0)
    blues = tuple(d for d in distinct if d % 2 == 1)
    return TwoColorPartition(evens=evens, greens=op.overlined, blues=blues)


def twocolor_to_overpartition(p: TwoColorPartition) -> OddOverpartition:
    """Green parts turn overlined; the distinct blue parts (even and odd
    together) merge back into a multiset of plain odd parts."""
    blue_parts = tuple(sorted(p.evens + p.blues, reverse=True))
    return OddOverpartition(overlined=p.greens, plain=glaisher_merge(blue_parts))
