"""The odd/distinct bijection and the overpartition correspondence."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import odd_overpartitions, two_color_partitions
from twocolor import (
    InvalidPartition,
    OddOverpartition,
    TwoColorPartition,
    enumerate_odd_overpartitions,
    enumerate_two_color,
    glaisher_merge,
    glaisher_split,
    overpartition_to_twocolor,
    twocolor_to_overpartition,
)


def test_split_examples():
    assert glaisher_split((5,)) == (5,)
    assert glaisher_split((1, 1, 1)) == (2, 1)
    assert glaisher_split((3, 3, 1)) == (6, 1)


def test_merge_examples():
    assert glaisher_merge((5,)) == (5,)
    assert glaisher_merge((6, 3, 1)) == (3, 3, 3, 1)
    assert glaisher_merge((2, 1)) == (1, 1, 1)


def test_split_rejects_even_entries():
    with pytest.raises(InvalidPartition, match="must be odd"):
        glaisher_split((2,))


def test_merge_rejects_repeats():
    with pytest.raises(InvalidPartition, match="strictly decreasing"):
        glaisher_merge((3, 3))


@given(st.lists(st.integers(1, 40).map(lambda k: 2 * k - 1), max_size=8))
def test_split_properties(odd_parts):
    odd_parts = tuple(sorted(odd_parts, reverse=True))
    out = glaisher_split(odd_parts)
    assert sum(out) == sum(odd_parts)
    assert all(a > b for a, b in zip(out, out[1:]))
    assert glaisher_merge(out) == odd_parts


@given(st.frozensets(st.integers(1, 80), max_size=8))
def test_merge_properties(distinct):
    distinct = tuple(sorted(distinct, reverse=True))
    out = glaisher_merge(distinct)
    assert sum(out) == sum(distinct)
    assert all(m % 2 == 1 for m in out)
    assert glaisher_split(out) == distinct


def test_overpartition_to_twocolor_examples():
    assert overpartition_to_twocolor(OddOverpartition()) == TwoColorPartition()
    assert overpartition_to_twocolor(
        OddOverpartition((3,), (3, 1, 1))
    ) == TwoColorPartition(evens=(2,), greens=(3,), blues=(3,))
    assert overpartition_to_twocolor(
        OddOverpartition((5, 1), (3,))
    ) == TwoColorPartition(greens=(5, 1), blues=(3,))


def test_twocolor_to_overpartition_examples():
    assert twocolor_to_overpartition(TwoColorPartition()) == OddOverpartition()
    assert twocolor_to_overpartition(
        TwoColorPartition(evens=(2,), greens=(3,), blues=(3,))
    ) == OddOverpartition((3,), (3, 1, 1))
    assert twocolor_to_overpartition(
        TwoColorPartition(evens=(4,), blues=(1,))
    ) == OddOverpartition(plain=(1, 1, 1, 1, 1))


@given(odd_overpartitions())
def test_forward_round_trip(op):
    image = overpartition_to_twocolor(op)
    assert image.weight == op.weight
    assert twocolor_to_overpartition(image) == op


@given(two_color_partitions())
def test_backward_round_trip(p):
    image = twocolor_to_overpartition(p)
    assert image.weight == p.weight
    assert overpartition_to_twocolor(image) == p


def test_bijection_on_small_weights():
    for n in range(13):
        sources = enumerate_odd_overpartitions(n)
        images = [overpartition_to_twocolor(op) for op in sources]
        assert len(set(images)) == len(images)
        assert set(images) == set(enumerate_two_color(n))
