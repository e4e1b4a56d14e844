"""Shared strategies and pinned transformation fixtures."""

from hypothesis import strategies as st

from twocolor import OddOverpartition, TwoColorPartition

_EVENS = list(range(2, 25, 2))
_ODDS = list(range(1, 25, 2))

# the five pinned forward transformations (input, image); each is also
# checked in the reverse direction
GOLDEN_PAIRS = [
    (
        TwoColorPartition((12, 6), (13, 9, 5, 3), (5, 1)),
        TwoColorPartition((6,), (15, 11, 7, 5), (7, 3)),
    ),
    (
        TwoColorPartition((), (7, 5, 1), (5, 3)),
        TwoColorPartition((8,), (5, 3), (5,)),
    ),
    (
        TwoColorPartition((12, 2), (7, 3), (11, 7, 5, 3)),
        TwoColorPartition((2,), (7, 5, 1), (13, 9, 7, 5, 1)),
    ),
    (
        TwoColorPartition((4,), (11, 7, 3, 1), (9, 7, 3, 1)),
        TwoColorPartition((12, 4), (9, 5, 3), (7, 5, 1)),
    ),
    (
        TwoColorPartition((2,), (3, 1), ()),
        TwoColorPartition((), (5, 1), ()),
    ),
]


def _desc(values) -> tuple[int, ...]:
    return tuple(sorted(values, reverse=True))


@st.composite
def two_color_partitions(draw, max_color_parts: int = 4):
    evens = draw(st.frozensets(st.sampled_from(_EVENS), max_size=max_color_parts))
    greens = draw(st.frozensets(st.sampled_from(_ODDS), max_size=max_color_parts))
    blues = draw(st.frozensets(st.sampled_from(_ODDS), max_size=max_color_parts))
    return TwoColorPartition(_desc(evens), _desc(greens), _desc(blues))


@st.composite
def odd_overpartitions(draw, max_parts: int = 5):
    overlined = draw(st.frozensets(st.sampled_from(_ODDS), max_size=max_parts))
    plain = draw(st.lists(st.sampled_from(_ODDS), max_size=max_parts))
    return OddOverpartition(_desc(overlined), _desc(plain))


@st.composite
def odd_distinct_sequences(draw, max_parts: int = 5):
    return _desc(draw(st.frozensets(st.sampled_from(_ODDS), max_size=max_parts)))
