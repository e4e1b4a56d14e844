"""Acceptance suite: exhaustive verification at the full desk-scale bounds.

Each criterion is one test that prints a single pass/fail line (visible
with ``pytest -s`` or in the captured output on failure).  All checks are
exact integer comparisons; the stated runtime budgets are asserted.
"""

import time

from conftest import GOLDEN_PAIRS
from twocolor import (
    COLUMN,
    ROW,
    build_diagram,
    enumerate_two_color,
    is_exceptional,
    longest_all_square_strip,
    merge_adjoined,
    series_E,
    series_podd,
    split_and_read,
    square_witness,
    staircase,
    transform,
    verify_bijection,
    verify_involution,
    verify_theorem,
)

FULL_LIMIT = 40
SERIES_LIMIT = 200
SQUARES = {1, 4, 9, 16, 25, 36}


def _conclude(name: str, ok: bool, detail: str = "") -> None:
    suffix = f"  ({detail})" if detail else ""
    print(f"{'PASS' if ok else 'FAIL'}  {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_criterion_1_golden_transformations():
    start = time.perf_counter()
    ok = all(
        transform(source).result == image and transform(image).result == source
        for source, image in GOLDEN_PAIRS
    )
    elapsed = time.perf_counter() - start
    _conclude(
        "criterion 1: five golden transformations, both directions",
        ok and elapsed < 1.0,
        f"{elapsed:.3f}s",
    )


def test_criterion_2_identity_table():
    start = time.perf_counter()
    reports = verify_theorem(FULL_LIMIT)
    ok = all(r.passed for r in reports)
    for r in reports:
        expected_gap = 2 if r.n in SQUARES else 0
        ok &= r.E == r.p_o_bar
        ok &= r.E0 - r.E1 == expected_gap
        ok &= r.E2 - r.E3 == expected_gap * (-1) ** r.n
    rows = {r.n: r for r in reports}
    ok &= (rows[4].E, rows[4].E0, rows[4].E1, rows[4].E2, rows[4].E3) == (6, 4, 2, 4, 2)
    ok &= (rows[5].E, rows[5].E0, rows[5].E1, rows[5].E2, rows[5].E3) == (8, 4, 4, 4, 4)
    elapsed = time.perf_counter() - start
    _conclude(
        f"criterion 2: identity table exact for 1..{FULL_LIMIT}",
        ok and elapsed < 60.0,
        f"{elapsed:.1f}s",
    )


def test_criterion_3_involution_audit():
    start = time.perf_counter()
    ok = True
    for n in range(1, FULL_LIMIT + 1):
        audit = verify_involution(n)
        ok &= audit.passed
        witness = square_witness(n)
        if witness.is_square:
            ok &= len(audit.exceptional) == 2
            ok &= all(
                p.evens == () and p.num_parts == witness.k for p in audit.exceptional
            )
        else:
            ok &= audit.exceptional == ()
    elapsed = time.perf_counter() - start
    _conclude(
        f"criterion 3: involution audit exact for 1..{FULL_LIMIT}",
        ok and elapsed < 60.0,
        f"{elapsed:.1f}s",
    )


def test_criterion_4_bijection_audit():
    start = time.perf_counter()
    ok = all(verify_bijection(n).passed for n in range(FULL_LIMIT + 1))
    elapsed = time.perf_counter() - start
    _conclude(
        f"criterion 4: bijection audit for 0..{FULL_LIMIT}",
        ok,
        f"{elapsed:.1f}s",
    )


def test_criterion_5_series_oracles():
    start = time.perf_counter()
    deep_two_color = series_E(SERIES_LIMIT)
    deep_odd_over = series_podd(SERIES_LIMIT)
    ok = deep_two_color.coefficients == deep_odd_over.coefficients
    for n in range(FULL_LIMIT + 1):
        ok &= deep_two_color[n] == len(enumerate_two_color(n))
    elapsed = time.perf_counter() - start
    _conclude(
        f"criterion 5: series agree to {SERIES_LIMIT} and match enumeration to {FULL_LIMIT}",
        ok and elapsed < 5.0,
        f"{elapsed:.1f}s",
    )


def test_criterion_6_diagram_round_trip_and_staircase_lemma():
    start = time.perf_counter()
    ok = True
    for n in range(FULL_LIMIT + 1):
        for p in enumerate_two_color(n):
            ok &= split_and_read(build_diagram(p.greens, p.blues)) == (p.greens, p.blues)
            merged = merge_adjoined(build_diagram(p.greens, p.blues))
            if len(p.greens) > len(p.blues):
                report = longest_all_square_strip(merged, COLUMN)
                bare = p.blues == () and p.greens == staircase(len(p.greens))
            else:
                report = longest_all_square_strip(merged, ROW)
                bare = p.greens == () and p.blues == staircase(len(p.blues))
            ok &= (report.length == 0) == bare
    elapsed = time.perf_counter() - start
    _conclude(
        f"criterion 6: diagram round trip and staircase lemma for 0..{FULL_LIMIT}",
        ok,
        f"{elapsed:.1f}s",
    )


def test_weight_zero_reported_but_exempt():
    from twocolor import identity_report

    report = identity_report(0)
    _conclude(
        "weight 0 reported separately, exempt from identity checks",
        report.E == report.p_o_bar == 1 and report.exempt,
    )


def test_non_exceptional_coverage_sanity():
    # every non-exceptional element really is transformable
    count = sum(
        1
        for p in enumerate_two_color(16)
        if not is_exceptional(p) and transform(p).result.weight == 16
    )
    _conclude("all non-exceptional elements of one square weight transform", count > 0)
