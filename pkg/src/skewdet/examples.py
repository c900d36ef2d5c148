"""Frozen worked examples used across the test suite and the CLI demos.

Every literal here was derived by hand from the definitions and then
cross-checked by the independent oracles in the tests; names describe the
object, and the box sets are spelled out so a failing test points at
geometry, not at a loader.
"""

from __future__ import annotations

from .decomp import Decomposition
from .shapes import SkewShape

# ---------------------------------------------------------------------------
# The running 18-box example: (6,6,6,4)/(3,1) decomposed into three
# thickened strips sharing three corners.

WORKED_SHAPE = SkewShape((6, 6, 6, 4), (3, 1))

WORKED_STRIPS = (
    frozenset({(1, 6), (2, 5), (2, 6), (3, 5), (3, 6)}),
    frozenset(
        {(1, 4), (1, 5), (2, 4), (2, 5), (3, 3), (3, 4), (4, 1), (4, 2), (4, 3), (4, 4)}
    ),
    frozenset({(2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 1)}),
)

WORKED_DECOMPOSITION = Decomposition(WORKED_SHAPE, WORKED_STRIPS)

WORKED_SHARED_CORNERS = frozenset({(4, 1), (3, 3), (2, 5)})

# The # table of the worked decomposition, as canonical skew shapes; the
# diagonal reproduces the strips themselves, and the (3,1) entry collapses
# to the empty segment.
WORKED_SHARP_TABLE = {
    (1, 1): SkewShape((2, 2, 2), (1,)),
    (2, 2): SkewShape((5, 5, 4, 4), (3, 3, 2)),
    (3, 3): SkewShape((3, 3, 1), (1,)),
    (1, 2): SkewShape((5, 5, 5, 4, 4), (4, 3, 3, 2)),
    (1, 3): SkewShape((4, 4, 4, 3, 3, 1), (3, 2, 2, 1)),
    (2, 1): SkewShape((2, 2)),
    (2, 3): SkewShape((4, 4, 3, 3, 1), (2, 2, 1)),
    (3, 1): SkewShape(()),
    (3, 2): SkewShape((4, 4), (2,)),
}

# ---------------------------------------------------------------------------
# Small fully-verified example: (2,2) as a bent strip plus a domino sharing
# one corner.  Small enough that every pipeline stage was checked by hand.

SMALL_SHARED_SHAPE = SkewShape((2, 2))

SMALL_SHARED_STRIPS = (
    frozenset({(2, 1), (2, 2), (1, 2)}),
    frozenset({(1, 1), (1, 2)}),
)

SMALL_SHARED_DECOMPOSITION = Decomposition(SMALL_SHARED_SHAPE, SMALL_SHARED_STRIPS)

# ---------------------------------------------------------------------------
# The 3x3 square as two 6-box thickened strips sharing a full diagonal of
# three corners; the smallest decomposition with r = g = ... well, r = 3.

SQUARE_SHAPE = SkewShape((3, 3, 3))

SQUARE_STRIPS = (
    frozenset({(3, 1), (3, 2), (3, 3), (2, 2), (2, 3), (1, 3)}),
    frozenset({(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)}),
)

SQUARE_DECOMPOSITION = Decomposition(SQUARE_SHAPE, SQUARE_STRIPS)

# ---------------------------------------------------------------------------
# Invalid covers of (8,6,6,2,1)/(3,2): structurally fine-looking strip sets
# that break the perimeter rules.  The first contains a strip starting in
# the interior; the second a strip ending in the interior.

INVALID_SHAPE = SkewShape((8, 6, 6, 2, 1), (3, 2))

INVALID_START_STRIPS = (
    frozenset({(1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (2, 4)}),
    frozenset({(5, 1), (4, 1), (4, 2), (3, 2), (3, 3), (2, 3)}),
    frozenset({(3, 1)}),
    frozenset({(3, 4), (3, 5), (2, 5), (2, 6)}),
    frozenset({(3, 6)}),
)

INVALID_END_STRIPS = (
    frozenset({(5, 1), (4, 1), (4, 2)}),
    frozenset({(3, 1), (3, 2), (3, 3), (3, 4)}),
    frozenset({(3, 5), (3, 6), (2, 6), (1, 6), (1, 7), (1, 8)}),
    frozenset({(2, 3), (2, 4), (2, 5), (1, 5)}),
    frozenset({(1, 4)}),
)

# ---------------------------------------------------------------------------
# A nine-box thickened strip, thick at both ends with a single thin bend:
# the bend (2,3) is its only corner that is not special.

CORNER_DEMO_STRIP = frozenset(
    {(4, 2), (4, 3), (3, 2), (3, 3), (2, 3), (2, 4), (1, 4), (1, 5), (2, 5)}
)

# ---------------------------------------------------------------------------
# A valid but non-nested five-strip decomposition of (8,8,8,7,4)/(3,1),
# sharing exactly the corners listed; found by constrained search against
# the published corner set and frozen.  Filled in by tests/conftest helpers
# once; see NONNESTED_* below.

NONNESTED_SHAPE = SkewShape((8, 8, 8, 7, 4), (3, 1))

NONNESTED_SHARED_CORNERS = frozenset(
    {(2, 3), (2, 5), (4, 5), (3, 6), (2, 7), (1, 8)}
)

# placeholder replaced by the dev search; kept None until frozen
NONNESTED_STRIPS: tuple | None = None
