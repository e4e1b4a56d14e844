#!/usr/bin/env python3
"""Walk the five pinned even-part exchanges with before/after diagrams."""

from twocolor import TwoColorPartition, build_diagram, render, transform

CASES = [
    TwoColorPartition((12, 6), (13, 9, 5, 3), (5, 1)),
    TwoColorPartition((), (7, 5, 1), (5, 3)),
    TwoColorPartition((12, 2), (7, 3), (11, 7, 5, 3)),
    TwoColorPartition((4,), (11, 7, 3, 1), (9, 7, 3, 1)),
    TwoColorPartition((2,), (3, 1), ()),
]


def show(p: TwoColorPartition) -> str:
    return f"evens={list(p.evens)} greens={list(p.greens)} blues={list(p.blues)}"


def main() -> None:
    for i, source in enumerate(CASES, 1):
        outcome = transform(source)
        result = outcome.result
        print(f"=== case {i}: {show(source)}")
        print(render(build_diagram(source.greens, source.blues)))
        print(
            f"--> {outcome.direction} via {outcome.strip.action} "
            f"({outcome.strip.orientation} {outcome.strip.position}, "
            f"strip length {outcome.strip.length})"
        )
        print(f"--> {show(result)}")
        print(render(build_diagram(result.greens, result.blues)))
        back = transform(result).result
        print(f"back again: {show(back)}  (round trip {'ok' if back == source else 'BROKEN'})")
        print()


if __name__ == "__main__":
    main()
