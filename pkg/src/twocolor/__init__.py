"""Two-color partitions, odd overpartitions, and their parity identities.

A library plus CLI for the combinatorics connecting two-color partitions
with distinct parts (even parts blue only) to overpartitions into odd
parts: exhaustive enumerators, the recoloring/Glaisher bijection between
the families, two-modular diagrams with strip surgery, the even-part
exchange that pairs off the parity classes, and independent power-series
oracles for every count.
"""

from .diagram import (
    CELL_VALUE,
    COLUMN,
    LOWER_TRIANGLE,
    MERGED_SQUARE,
    ROW,
    SQUARE,
    TRIANGLE_PAIR,
    UPPER_TRIANGLE,
    MalformedDiagram,
    ModularDiagram,
    StripReport,
    build_diagram,
    far_edge_position,
    insert_strip,
    longest_all_square_strip,
    merge_adjoined,
    remove_strip,
    render,
    split_and_read,
)
from .glaisher import (
    glaisher_merge,
    glaisher_split,
    overpartition_to_twocolor,
    twocolor_to_overpartition,
)
from .involution import (
    EVENS_GREW,
    EVENS_SHRANK,
    ExceptionalPartition,
    TransformOutcome,
    is_exceptional,
    staircase,
    transform,
)
from .partitions import (
    EVEN,
    MAX_WEIGHT,
    ODD,
    InvalidInput,
    InvalidPartition,
    OddOverpartition,
    ParityClass,
    SquareWitness,
    TwoColorPartition,
    classify,
    enumerate_odd_overpartitions,
    enumerate_two_color,
    square_witness,
    weight,
)
from .series import CoefficientOverflow, PowerSeries, series_E, series_podd
from .verify import (
    BijectionAudit,
    IdentityReport,
    InvolutionAudit,
    SeriesAudit,
    format_table,
    identity_report,
    verify_bijection,
    verify_involution,
    verify_series,
    verify_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "CELL_VALUE",
    "COLUMN",
    "EVEN",
    "EVENS_GREW",
    "EVENS_SHRANK",
    "LOWER_TRIANGLE",
    "MAX_WEIGHT",
    "MERGED_SQUARE",
    "ODD",
    "ROW",
    "SQUARE",
    "TRIANGLE_PAIR",
    "UPPER_TRIANGLE",
    "BijectionAudit",
    "CoefficientOverflow",
    "ExceptionalPartition",
    "IdentityReport",
    "InvalidInput",
    "InvalidPartition",
    "InvolutionAudit",
    "MalformedDiagram",
    "ModularDiagram",
    "OddOverpartition",
    "ParityClass",
    "PowerSeries",
    "SeriesAudit",
    "SquareWitness",
    "StripReport",
    "TransformOutcome",
    "TwoColorPartition",
    "build_diagram",
    "classify",
    "enumerate_odd_overpartitions",
    "enumerate_two_color",
    "far_edge_position",
    "format_table",
    "glaisher_merge",
    "glaisher_split",
    "identity_report",
    "insert_strip",
    "is_exceptional",
    "longest_all_square_strip",
    "merge_adjoined",
    "overpartition_to_twocolor",
    "remove_strip",
    "render",
    "series_E",
    "series_podd",
    "split_and_read",
    "square_witness",
    "staircase",
    "transform",
    "twocolor_to_overpartition",
    "verify_bijection",
    "verify_involution",
    "verify_series",
    "verify_theorem",
    "weight",
]
