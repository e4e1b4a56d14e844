"""Two-modular diagrams for pairs of distinct odd partitions.

A pair (greens, blues) of strictly decreasing odd sequences is laid out on
a 1-indexed grid around the main diagonal.  Each odd part 2a+1 contributes
one triangle on a diagonal cell plus ``a`` squares: green parts extend
right along their row, blue parts extend down their column.  A square
carries value 2 and a lone triangle value 1, so the total cell value of a
diagram equals the summed weight of both colors.

Anchoring: with s greens, t blues and d = max(s, t), the i-th largest
green anchors at diagonal cell (d-s+i, d-s+i) and the j-th largest blue at
(d-t+j, d-t+j).  The smallest part of each color therefore sits at (d, d),
opposite-color triangles adjoin pairwise on the low end of the diagonal,
and |s - t| triangles of the majority color stay lone.

Strip edits (removal/insertion of all-square grid lines) shift the other
lines as units.  Whether a cell is "on the diagonal" is positional: row ==
column after the shift, regardless of history.  Reading a diagram back
into parts therefore first splits every value-2 cell that sits on the
diagonal into an adjoined triangle pair, then walks the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .partitions import TwoColorPartition

SQUARE = "square"
UPPER_TRIANGLE = "upper"
LOWER_TRIANGLE = "lower"
#: both triangles on one diagonal cell, diagonal line still drawn
TRIANGLE_PAIR = "pair"
#: an adjoined pair whose diagonal line was deleted; behaves as a square
MERGED_SQUARE = "merged"

CELL_VALUE = {SQUARE: 2, MERGED_SQUARE: 2, TRIANGLE_PAIR: 2, UPPER_TRIANGLE: 1, LOWER_TRIANGLE: 1}

ROW = "row"
COLUMN = "column"

#: pixel size of one grid cell in SVG output
CELL_PX = 32


class MalformedDiagram(ValueError):
    """A diagram or an edit on it violates the grid rules."""


def _square_like(kind: str | None) -> bool:
    return kind == SQUARE or kind == MERGED_SQUARE


@dataclass(frozen=True)
class ModularDiagram:
    """Sparse cell map of a two-modular diagram.

    Triangles (lone or paired) may only sit on diagonal cells; merged
    squares are created on the diagonal but may drift off it while a strip
    edit is in flight, where they count as plain squares.
    """

    cells: dict[tuple[int, int], str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cells = dict(self.cells)
        object.__setattr__(self, "cells", cells)
        for (r, c), kind in cells.items():
            if kind not in CELL_VALUE:
                raise MalformedDiagram(f"unknown cell kind {kind!r} at {(r, c)}")
            if r < 1 or c < 1:
                raise MalformedDiagram(f"cell {(r, c)} outside the positive grid")
            if kind in (UPPER_TRIANGLE, LOWER_TRIANGLE, TRIANGLE_PAIR) and r != c:
                raise MalformedDiagram(f"triangle off the diagonal at {(r, c)}")

    @property
    def diagonal_length(self) -> int:
        return max((r for (r, c) in self.cells if r == c), default=0)

    @property
    def max_row(self) -> int:
        return max((r for (r, _) in self.cells), default=0)

    @property
    def max_col(self) -> int:
        return max((c for (_, c) in self.cells), default=0)

    @property
    def value(self) -> int:
        """Total cell value: 2 per square-like cell or pair, 1 per lone triangle."""
        return sum(CELL_VALUE[kind] for kind in self.cells.values())


@dataclass(frozen=True)
class StripReport:
    """The located longest all-square grid line and what was done with it."""

    orientation: str
    length: int
    position: int
    action: str = "none"  # none | removed | inserted | far_edge_inserted

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation,
            "length": self.length,
            "position": self.position,
            "action": self.action,
        }


def _check_orientation(orientation: str) -> None:
    if orientation not in (ROW, COLUMN):
        raise MalformedDiagram(f"orientation must be {ROW!r} or {COLUMN!r}, got {orientation!r}")


def _line_of(pos: tuple[int, int], orientation: str) -> int:
    return pos[1] if orientation == COLUMN else pos[0]


def build_diagram(greens, blues) -> ModularDiagram:
    """Lay out two odd distinct-part sequences around the diagonal.

    Coinciding triangles are stored as an adjoined pair (the diagonal line
    is still drawn); call :func:`merge_adjoined` to turn pairs into merged
    squares before strip hunting.
    """
    probe = TwoColorPartition(greens=greens, blues=blues)  # validates both sequences
    greens, blues = probe.greens, probe.blues
    s, t = len(greens), len(blues)
    d = max(s, t)
    cells: dict[tuple[int, int], str] = {}
    for i, part in enumerate(greens, start=1):
        k = d - s + i
        cells[(k, k)] = UPPER_TRIANGLE
        for c in range(k + 1, k + 1 + (part - 1) // 2):
            cells[(k, c)] = SQUARE
    for j, part in enumerate(blues, start=1):
        k = d - t + j
        cells[(k, k)] = TRIANGLE_PAIR if cells.get((k, k)) == UPPER_TRIANGLE else LOWER_TRIANGLE
        for r in range(k + 1, k + 1 + (part - 1) // 2):
            cells[(r, k)] = SQUARE
    return ModularDiagram(cells)


def merge_adjoined(dia: ModularDiagram) -> ModularDiagram:
    """Delete the diagonal line through every adjoined triangle pair.

    Afterwards exactly |#greens - #blues| lone triangles remain.
    """
    return ModularDiagram(
        {pos: MERGED_SQUARE if kind == TRIANGLE_PAIR else kind for pos, kind in dia.cells.items()}
    )


def longest_all_square_strip(dia: ModularDiagram, orientation: str) -> StripReport:
    """Longest grid line of the given orientation containing squares only.

    Lines containing any triangle are excluded.  Ties break to the smallest
    index (leftmost column / topmost row); with no qualifying line the
    report has length 0 and position 0.
    """
    _check_orientation(orientation)
    lines: dict[int, list[str]] = {}
    for pos, kind in dia.cells.items():
        lines.setdefault(_line_of(pos, orientation), []).append(kind)
    best_length = 0
    best_position = 0
    for index in sorted(lines):
        kinds = lines[index]
        if len(kinds) > best_length and all(_square_like(k) for k in kinds):
            best_length = len(kinds)
            best_position = index
    return StripReport(orientation=orientation, length=best_length, position=best_position)


def remove_strip(dia: ModularDiagram, orientation: str, position: int) -> ModularDiagram:
    """Delete an all-square line; lines beyond it shift one step toward it."""
    _check_orientation(orientation)
    line = sorted(pos for pos in dia.cells if _line_of(pos, orientation) == position)
    if not line:
        raise MalformedDiagram(f"no cells in {orientation} {position}")
    for pos in line:
        if not _square_like(dia.cells[pos]):
            raise MalformedDiagram(
                f"{orientation} {position} is not all-square: {dia.cells[pos]} at {pos}"
            )
    cells: dict[tuple[int, int], str] = {}
    for (r, c), kind in dia.cells.items():
        index = c if orientation == COLUMN else r
        if index == position:
            continue
        if index > position:
            r, c = (r, c - 1) if orientation == COLUMN else (r - 1, c)
        cells[(r, c)] = kind
    return ModularDiagram(cells)


def insert_strip(
    dia: ModularDiagram, orientation: str, position: int, num_squares: int
) -> ModularDiagram:
    """Insert a line of squares at ``position``; lines at >= position shift away.

    Columns are top-justified (rows 1..num_squares), rows left-justified.
    """
    _check_orientation(orientation)
    if position < 1:
        raise MalformedDiagram(f"insertion position must be >= 1, got {position}")
    if num_squares < 1:
        raise MalformedDiagram("an inserted strip needs at least one square")
    cells: dict[tuple[int, int], str] = {}
    for (r, c), kind in dia.cells.items():
        index = c if orientation == COLUMN else r
        if index >= position:
            r, c = (r, c + 1) if orientation == COLUMN else (r + 1, c)
        cells[(r, c)] = kind
    for i in range(1, num_squares + 1):
        cells[(i, position) if orientation == COLUMN else (position, i)] = SQUARE
    return ModularDiagram(cells)


def far_edge_position(dia: ModularDiagram, orientation: str) -> int:
    """One past the last occupied line: the far-right column or bottom row."""
    _check_orientation(orientation)
    return (dia.max_col if orientation == COLUMN else dia.max_row) + 1


def split_and_read(dia: ModularDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Draw the diagonal back and read off (greens, blues).

    Every value-2 cell sitting on a diagonal position splits into an
    adjoined triangle pair.  Each upper triangle at (k, k) then yields the
    green part 1 + 2 * (contiguous squares to its right in row k), each
    lower triangle the blue part from the squares below it in column k.
    Raises :class:`MalformedDiagram` if any cell stays unconsumed, a color
    is not strictly decreasing, or rebuilding the parts does not reproduce
    the cell map.
    """
    cells = dict(dia.cells)
    for (r, c), kind in list(cells.items()):
        if r == c and _square_like(kind):
            cells[(r, c)] = TRIANGLE_PAIR
    consumed: set[tuple[int, int]] = set()
    greens: list[int] = []
    blues: list[int] = []
    for k in sorted(r for (r, c) in cells if r == c):
        kind = cells[(k, k)]
        consumed.add((k, k))
        if kind in (UPPER_TRIANGLE, TRIANGLE_PAIR):
            run = 0
            while _square_like(cells.get((k, k + run + 1))):
                run += 1
                consumed.add((k, k + run))
            greens.append(1 + 2 * run)
        if kind in (LOWER_TRIANGLE, TRIANGLE_PAIR):
            run = 0
            while _square_like(cells.get((k + run + 1, k))):
                run += 1
                consumed.add((k + run, k))
            blues.append(1 + 2 * run)
    stray = sorted(set(cells) - consumed)
    if stray:
        raise MalformedDiagram(f"cell {stray[0]} is not part of any row or column run")
    for color, parts in (("green", greens), ("blue", blues)):
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise MalformedDiagram(f"{color} parts read off as {parts}, not strictly decreasing")
    result = (tuple(greens), tuple(blues))
    rebuilt = build_diagram(*result)
    if _normalized(rebuilt.cells) != _normalized(cells):
        raise MalformedDiagram("diagram is not the canonical layout of the parts it reads as")
    return result


def _normalized(cells: dict[tuple[int, int], str]) -> dict[tuple[int, int], str]:
    return {pos: SQUARE if kind == MERGED_SQUARE else kind for pos, kind in cells.items()}


# --- rendering -------------------------------------------------------------
#
# ASCII charset, one fixed-width cell per grid position:
#   square / merged  [ 2 ]      lone upper triangle  [ \1]
#   adjoined pair    [1\1]      lone lower triangle  [1\ ]
# The backslash is the diagonal line through an unmerged hypotenuse; with
# unicode=True it is drawn as U+2572.


def render(dia: ModularDiagram, fmt: str = "ascii", unicode: bool = False) -> str:
    """Deterministic ASCII or SVG picture of a diagram."""
    if fmt == "ascii":
        return _render_ascii(dia, unicode)
    if fmt == "svg":
        return _render_svg(dia)
    raise MalformedDiagram(f"render format must be 'ascii' or 'svg', got {fmt!r}")


def _render_ascii(dia: ModularDiagram, unicode: bool) -> str:
    if not dia.cells:
        return ""
    diag = "╲" if unicode else "\\"
    glyphs = {
        SQUARE: "[ 2 ]",
        MERGED_SQUARE: "[ 2 ]",
        TRIANGLE_PAIR: f"[1{diag}1]",
        UPPER_TRIANGLE: f"[ {diag}1]",
        LOWER_TRIANGLE: f"[1{diag} ]",
        None: "     ",
    }
    lines = []
    for r in range(1, dia.max_row + 1):
        row = "".join(glyphs[dia.cells.get((r, c))] for c in range(1, dia.max_col + 1))
        lines.append(row.rstrip())
    return "\n".join(lines) + "\n"


def _render_svg(dia: ModularDiagram) -> str:
    width = dia.max_col * CELL_PX
    height = dia.max_row * CELL_PX
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
    ]
    for (r, c) in sorted(dia.cells):
        kind = dia.cells[(r, c)]
        x, y = (c - 1) * CELL_PX, (r - 1) * CELL_PX
        if _square_like(kind):
            parts.append(_svg_rect(x, y))
            parts.append(_svg_label(x + 16, y + 16, "2"))
        if kind in (UPPER_TRIANGLE, TRIANGLE_PAIR):
            parts.append(_svg_triangle(x, y, upper=True))
            parts.append(_svg_label(x + 22, y + 10, "1"))
        if kind in (LOWER_TRIANGLE, TRIANGLE_PAIR):
            parts.append(_svg_triangle(x, y, upper=False))
            parts.append(_svg_label(x + 10, y + 22, "1"))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _svg_rect(x: int, y: int) -> str:
    return (
        f'<rect x="{x}" y="{y}" width="{CELL_PX}" height="{CELL_PX}" '
        'fill="none" stroke="black"/>'
    )


def _svg_triangle(x: int, y: int, upper: bool) -> str:
    s = CELL_PX
    if upper:
        points = f"{x},{y} {x + s},{y} {x + s},{y + s}"
    else:
        points = f"{x},{y} {x},{y + s} {x + s},{y + s}"
    return f'<polygon points="{points}" fill="none" stroke="black"/>'


def _svg_label(x: int, y: int, text: str) -> str:
    return (
        f'<text x="{x}" y="{y}" font-size="12" text-anchor="middle" '
        f'dominant-baseline="central">{text}</text>'
    )
