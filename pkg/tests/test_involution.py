"""The even-part exchange: golden pairs, exceptional inputs, invariants."""

import pytest
from hypothesis import assume, given

from conftest import GOLDEN_PAIRS, two_color_partitions
from twocolor import (
    COLUMN,
    EVENS_GREW,
    EVENS_SHRANK,
    ROW,
    ExceptionalPartition,
    TwoColorPartition,
    classify,
    enumerate_two_color,
    is_exceptional,
    staircase,
    transform,
)

SWEEP_LIMIT = 14


def test_staircase_values():
    assert staircase(0) == ()
    assert staircase(1) == (1,)
    assert staircase(4) == (7, 5, 3, 1)
    assert sum(staircase(5)) == 25


def test_is_exceptional():
    assert is_exceptional(TwoColorPartition(greens=(5, 3, 1)))
    assert is_exceptional(TwoColorPartition(blues=(1,)))
    assert is_exceptional(TwoColorPartition())
    assert not is_exceptional(TwoColorPartition(evens=(2,), greens=(3, 1)))
    assert not is_exceptional(TwoColorPartition(greens=(5, 1)))
    assert not is_exceptional(TwoColorPartition(greens=(3, 1), blues=(1,)))
    assert not is_exceptional(TwoColorPartition(evens=(4,)))


def test_golden_pairs_forward_and_back():
    for source, image in GOLDEN_PAIRS:
        assert transform(source).result == image
        assert transform(image).result == source


def test_golden_pair_outcome_details():
    details = [transform(source) for source, _ in GOLDEN_PAIRS]
    observed = [
        (o.strip.orientation, o.strip.length, o.strip.position, o.strip.action, o.direction)
        for o in details
    ]
    assert observed == [
        (COLUMN, 5, 3, "inserted", EVENS_SHRANK),
        (COLUMN, 4, 2, "removed", EVENS_GREW),
        (ROW, 6, 3, "inserted", EVENS_SHRANK),
        (ROW, 6, 1, "removed", EVENS_GREW),
        (COLUMN, 0, 3, "far_edge_inserted", EVENS_SHRANK),
    ]


def test_transform_rejects_exceptional():
    with pytest.raises(ExceptionalPartition, match=r"green staircase \(5, 3, 1\)"):
        transform(TwoColorPartition(greens=(5, 3, 1)))
    with pytest.raises(ExceptionalPartition, match=r"blue staircase \(3, 1\)"):
        transform(TwoColorPartition(blues=(3, 1)))
    with pytest.raises(ExceptionalPartition, match="empty partition"):
        transform(TwoColorPartition())


def test_evens_only_partitions_transform():
    outcome = transform(TwoColorPartition(evens=(2,)))
    assert outcome.result == TwoColorPartition(greens=(1,), blues=(1,))
    assert outcome.strip.action == "far_edge_inserted"
    back = transform(outcome.result)
    assert back.result == TwoColorPartition(evens=(2,))
    assert back.direction == EVENS_GREW


def test_involution_sweep():
    for n in range(SWEEP_LIMIT + 1):
        for p in enumerate_two_color(n):
            if is_exceptional(p):
                continue
            image = transform(p).result
            assert image.weight == n
            assert image != p
            assert transform(image).result == p


@given(two_color_partitions())
def test_transform_invariants(p):
    assume(not is_exceptional(p))
    outcome = transform(p)
    image = outcome.result
    assert image.weight == p.weight
    assert (len(image.evens) - len(p.evens)) % 2 == 1
    assert len(image.greens) - len(image.blues) == len(p.greens) - len(p.blues)
    assert image != p
    assert transform(image).result == p
    before, after = classify(p), classify(image)
    assert before.evens_count_parity != after.evens_count_parity
    assert before.total_parts_parity != after.total_parts_parity


def test_exceptional_census_small_weights():
    for n in range(SWEEP_LIMIT + 1):
        members = enumerate_two_color(n)
        exceptional = {p for p in members if is_exceptional(p)}
        root = round(n**0.5)
        if n == 0:
            assert exceptional == {TwoColorPartition()}
        elif root * root == n:
            assert exceptional == {
                TwoColorPartition(greens=staircase(root)),
                TwoColorPartition(blues=staircase(root)),
            }
        else:
            assert exceptional == set()
