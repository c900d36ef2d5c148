"""Decomposition machinery against hand-verified geometry.

The worked 18-box example drives most assertions: corners, enrichment,
directions, nestedness, the cutting strip, endpoint addressing, and the
full # table.  Smaller shapes pin the walk orientation rules and every
validation failure code.
"""

import pytest

from skewdet.decomp import (
    Decomposition,
    box_direction,
    canonical_order,
    endpoint_u,
    endpoint_v,
    end_address,
    enriched_strip,
    is_nested,
    lower_corners,
    sharp,
    special_corners,
    start_address,
    strip_end,
    strip_start,
    thickened_cutting_strip,
    upper_corners,
    validate_decomposition,
    INF,
    RIGHT_DIR,
    RIGHT_UP_DIR,
    UP_DIR,
    UNDEFINED,
)
from skewdet.examples import (
    CORNER_DEMO_STRIP,
    INVALID_END_STRIPS,
    INVALID_SHAPE,
    INVALID_START_STRIPS,
    SMALL_SHARED_DECOMPOSITION,
    SQUARE_DECOMPOSITION,
    WORKED_DECOMPOSITION,
    WORKED_SHAPE,
    WORKED_SHARED_CORNERS,
    WORKED_SHARP_TABLE,
    WORKED_STRIPS,
)
from skewdet.shapes import SkewShape, boxes_to_skew, content, is_thickened_strip


def seg_shape(seg):
    """Normalize a sharp segment to a SkewShape; empty stays empty."""
    return SkewShape(()) if not seg else boxes_to_skew(seg)


# ---------------------------------------------------------------------------
# worked example: structure


def test_worked_validates():
    report = validate_decomposition(WORKED_DECOMPOSITION)
    assert report.ok, (report.code, report.message)


def test_worked_shares():
    d = WORKED_DECOMPOSITION
    assert d.g == 3
    assert d.r == 3
    assert set(d.shared_boxes) == set(WORKED_SHARED_CORNERS)
    assert d.shared_boxes[(4, 1)] == (1, 2)
    assert d.shared_boxes[(3, 3)] == (1, 2)
    assert d.shared_boxes[(2, 5)] == (0, 1)
    assert sum(len(s) for s in d.strips) == WORKED_SHAPE.size + d.r


def test_worked_corner_kinds():
    t1, t2, t3 = WORKED_STRIPS
    assert upper_corners(t1) == {(1, 6), (2, 5)}
    assert lower_corners(t1) == {(3, 6)}
    assert upper_corners(t2) == {(1, 4), (4, 1), (3, 3)}
    assert lower_corners(t2) == {(4, 4), (2, 5)}
    assert upper_corners(t3) == {(2, 2), (3, 1)}
    assert lower_corners(t3) == {(4, 1), (3, 3)}


def test_worked_special_corners():
    t1, t2, t3 = WORKED_STRIPS
    assert special_corners(t1) == {(1, 6), (2, 5), (3, 6)}
    assert special_corners(t2) == {(1, 4), (4, 1), (3, 3), (2, 5), (4, 4)}
    assert special_corners(t3) == {(4, 1), (2, 2), (3, 3)}


def test_worked_enrichment():
    d = WORKED_DECOMPOSITION
    t1, t2, t3 = WORKED_STRIPS
    assert enriched_strip(d, 0) == t1
    assert enriched_strip(d, 1) == t2 | {(5, 1), (5, 2)}
    assert enriched_strip(d, 2) == t3 | {(4, 0), (3, 0)}


def test_worked_directions():
    d = WORKED_DECOMPOSITION
    expected = {
        (3, 1): RIGHT_DIR,
        (4, 2): RIGHT_DIR,
        (3, 2): RIGHT_UP_DIR,
        (4, 3): RIGHT_UP_DIR,
        (3, 4): UP_DIR,
        (2, 3): UP_DIR,
        (3, 5): RIGHT_UP_DIR,
        (2, 4): RIGHT_UP_DIR,
        (1, 5): UP_DIR,
        (2, 6): UP_DIR,
    }
    for box, want in expected.items():
        (i,) = d.owners_of(box)
        assert box_direction(d, i, box) == want, box


def test_shared_special_corner_direction_per_owner():
    # (4,1) is shared; each owner walks out of it its own way
    d = WORKED_DECOMPOSITION
    assert box_direction(d, 1, (4, 1)) == RIGHT_DIR
    assert box_direction(d, 2, (4, 1)) == UP_DIR


def test_worked_is_nested():
    assert is_nested(WORKED_DECOMPOSITION)


# ---------------------------------------------------------------------------
# direction/special interplay on whole diagonals

# a diagonal of plain boxes all going right-and-up forces the next
# diagonal to be all special corners; the converse is false, since an
# ending box can supply a special corner above a diagonal that moves
# plainly right or up (splitting a row gives the smallest cases)


def assert_remark_property(d):
    specials = d.all_special_corners
    by_content = {}
    for b in d.shape.boxes:
        by_content.setdefault(content(b), []).append(b)

    def all_ru(c):
        diag = by_content.get(c, [])
        if not diag or any(b in specials for b in diag):
            return False
        return all(
            box_direction(d, d.owners_of(b)[0], b) == RIGHT_UP_DIR for b in diag
        )

    for c in by_content:
        if all_ru(c):
            nxt = by_content.get(c + 1)
            assert nxt and all(b in specials for b in nxt), c


def test_remark_property_on_examples():
    assert_remark_property(WORKED_DECOMPOSITION)
    assert_remark_property(SQUARE_DECOMPOSITION)
    assert_remark_property(SMALL_SHARED_DECOMPOSITION)


def test_remark_converse_fails():
    # content 5 is all special corners yet content 4 goes up, not
    # right-and-up: all-special diagonals do not need a right-and-up feeder
    d = WORKED_DECOMPOSITION
    specials = d.all_special_corners
    assert (1, 6) in specials
    for box in ((1, 5), (2, 6)):
        (i,) = d.owners_of(box)
        assert box_direction(d, i, box) == UP_DIR


# ---------------------------------------------------------------------------
# worked example: cutting strip, endpoints, sharp table

WORKED_H_BOXES = frozenset(
    {
        (1, -3),
        (1, -2),
        (0, -3),
        (0, -2),
        (0, -1),
        (0, 0),
        (-1, -1),
        (-1, 0),
        (-2, 0),
        (-2, 1),
        (-3, 0),
        (-3, 1),
        (-4, 1),
    }
)


def test_worked_cutting_strip():
    H = thickened_cutting_strip(WORKED_DECOMPOSITION)
    assert H.boxes == WORKED_H_BOXES
    assert H.phantoms == {(1, -3)}
    assert H.span == (-3, 5)
    assert is_thickened_strip(H.boxes)
    assert H.address[(-3, "+")] == (0, -3)
    assert H.address[(-3, "-")] == (1, -2)
    assert H.address[(0, "+")] == (-1, -1)
    assert H.address[(0, "-")] == (0, 0)
    assert H.address[(3, "+")] == (-3, 0)
    assert H.address[(3, "-")] == (-2, 1)
    assert H.address[(-2,)] == (0, -2)
    assert H.address[(-1,)] == (0, -1)
    assert H.address[(1,)] == (-1, 0)
    assert H.address[(2,)] == (-2, 0)
    assert H.address[(4,)] == (-3, 1)
    assert H.address[(5,)] == (-4, 1)
    for c in (-3, 0, 3):
        assert H.is_doubled(c)
    for c in (-2, -1, 1, 2, 4, 5):
        assert not H.is_doubled(c)
    # phantoms are geometry only, never addressable
    assert (1, -3) not in set(H.address.values())


def test_worked_endpoints():
    d = WORKED_DECOMPOSITION
    assert [endpoint_u(d, i) for i in range(3)] == [(2, INF), (-3, INF), (-3, 1)]
    assert [endpoint_v(d, i) for i in range(3)] == [(6, INF), (5, 1), (2, 1)]


def test_worked_addresses():
    d = WORKED_DECOMPOSITION
    assert [start_address(d, i) for i in range(3)] == [(2,), (-3, "+"), (-3, "-")]
    assert [end_address(d, i) for i in range(3)] == [(5,), (4,), (1,)]


def test_canonical_order_recovers_worked():
    shuffled = Decomposition(
        WORKED_SHAPE, (WORKED_STRIPS[2], WORKED_STRIPS[0], WORKED_STRIPS[1])
    )
    assert canonical_order(shuffled).strips == WORKED_DECOMPOSITION.strips
    assert canonical_order(WORKED_DECOMPOSITION).strips == WORKED_DECOMPOSITION.strips


def test_worked_sharp_table():
    d = WORKED_DECOMPOSITION
    H = thickened_cutting_strip(d)
    for (i, j), want in WORKED_SHARP_TABLE.items():
        seg = sharp(d, i - 1, j - 1, H)
        assert seg is not UNDEFINED
        assert seg_shape(seg) == want, (i, j)
        if seg:
            assert is_thickened_strip(seg), (i, j)


def test_sharp_diagonal_reproduces_strips():
    for d in (WORKED_DECOMPOSITION, SQUARE_DECOMPOSITION, SMALL_SHARED_DECOMPOSITION):
        H = thickened_cutting_strip(d)
        for i, strip in enumerate(d.strips):
            assert seg_shape(sharp(d, i, i, H)) == boxes_to_skew(strip)


# ---------------------------------------------------------------------------
# small shared example: (2,2) as hook + domino


def test_small_shared_pipeline():
    d = SMALL_SHARED_DECOMPOSITION
    assert validate_decomposition(d).ok
    assert d.r == 1 and set(d.shared_boxes) == {(1, 2)}
    assert is_nested(d)
    H = thickened_cutting_strip(d)
    assert H.boxes == {(0, -1), (0, 0), (0, 1), (-1, 0), (-1, 1)}
    assert H.phantoms == {(-1, 1)}
    assert H.address == {
        (-1,): (0, -1),
        (0,): (0, 0),
        (1, "-"): (0, 1),
        (1, "+"): (-1, 0),
    }
    assert start_address(d, 0) == (-1,)
    assert end_address(d, 0) == (1, "+")
    assert start_address(d, 1) == (0,)
    assert end_address(d, 1) == (1, "-")
    assert seg_shape(sharp(d, 0, 0, H)) == SkewShape((2, 2), (1,))
    assert seg_shape(sharp(d, 1, 1, H)) == SkewShape((2,))
    assert seg_shape(sharp(d, 0, 1, H)) == SkewShape((1, 1))
    assert seg_shape(sharp(d, 1, 0, H)) == SkewShape((3,))


def test_small_shared_canonical_order():
    d = SMALL_SHARED_DECOMPOSITION
    assert canonical_order(d).strips == d.strips


# ---------------------------------------------------------------------------
# 3x3 square as two thick strips sharing a whole diagonal


def test_square_pipeline():
    d = SQUARE_DECOMPOSITION
    assert validate_decomposition(d).ok
    assert d.g == 2 and d.r == 3
    assert set(d.shared_boxes) == {(3, 1), (2, 2), (1, 3)}
    assert is_nested(d)
    assert sum(len(s) for s in d.strips) == 9 + 3


# ---------------------------------------------------------------------------
# one-row overlap: (3) covered by two dominoes sharing the middle box


def test_row_overlap_pipeline():
    shape = SkewShape((3,))
    d = Decomposition(shape, ({(1, 1), (1, 2)}, {(1, 2), (1, 3)}))
    assert validate_decomposition(d).ok
    assert d.r == 1
    assert is_nested(d)
    H = thickened_cutting_strip(d)
    assert H.boxes == {(0, 0), (0, 1), (-1, 0), (-1, 1)}
    assert H.phantoms == frozenset()
    assert seg_shape(sharp(d, 0, 0, H)) == SkewShape((2,))
    assert seg_shape(sharp(d, 1, 1, H)) == SkewShape((2,))
    assert seg_shape(sharp(d, 0, 1, H)) == SkewShape(())
    assert seg_shape(sharp(d, 1, 0, H)) == SkewShape((2, 2))


# ---------------------------------------------------------------------------
# two-box walks pin the orientation of single-content transitions


def test_column_pair_walk_goes_right():
    # (2,1) exits rightward: the box above it belongs to the shape, so the
    # top-perimeter rule does not apply
    shape = SkewShape((1, 1))
    d = Decomposition(shape, ({(2, 1)}, {(1, 1)}))
    assert validate_decomposition(d).ok
    assert box_direction(d, 0, (2, 1)) == RIGHT_DIR
    assert box_direction(d, 1, (1, 1)) == UP_DIR
    H = thickened_cutting_strip(d)
    assert H.boxes == {(0, -1), (0, 0)}
    assert seg_shape(sharp(d, 1, 0, H)) == SkewShape((2,))
    assert sharp(d, 0, 1, H) == frozenset()


def test_row_pair_walk_goes_up():
    shape = SkewShape((2,))
    d = Decomposition(shape, ({(1, 1)}, {(1, 2)}))
    assert validate_decomposition(d).ok
    assert box_direction(d, 0, (1, 1)) == UP_DIR
    H = thickened_cutting_strip(d)
    assert H.boxes == {(0, 0), (-1, 0)}
    assert seg_shape(sharp(d, 1, 0, H)) == SkewShape((1, 1))


def test_single_strip_over_strip_shape():
    shape = SkewShape((2, 2), (1,))
    strip = frozenset(shape.boxes)
    d = Decomposition(shape, (strip,))
    assert validate_decomposition(d).ok
    assert d.r == 0
    assert is_nested(d)
    H = thickened_cutting_strip(d)
    assert seg_shape(sharp(d, 0, 0, H)) == boxes_to_skew(strip)


# ---------------------------------------------------------------------------
# corner censuses on single strips


def test_row_strip_corners():
    strip = frozenset({(1, 1), (1, 2), (1, 3)})
    assert upper_corners(strip) == {(1, 1)}
    assert lower_corners(strip) == {(1, 3)}
    assert special_corners(strip) == {(1, 1), (1, 3)}


def test_block_strip_corners():
    # of the four boxes only the NW and SE ones are corners; the walk's
    # start and end are not corners at all here
    strip = frozenset({(1, 1), (1, 2), (2, 1), (2, 2)})
    assert upper_corners(strip) == {(1, 1)}
    assert lower_corners(strip) == {(2, 2)}
    assert special_corners(strip) == {(1, 1), (2, 2)}
    assert strip_start(strip) == (2, 1)
    assert strip_end(strip) == (1, 2)


def test_corner_demo_strip():
    corners = upper_corners(CORNER_DEMO_STRIP) | lower_corners(CORNER_DEMO_STRIP)
    assert corners == {(3, 2), (2, 3), (1, 4), (4, 3), (2, 5)}
    assert special_corners(CORNER_DEMO_STRIP) == corners - {(2, 3)}


def test_single_box_has_no_corners():
    assert upper_corners({(1, 1)}) == frozenset()
    assert lower_corners({(1, 1)}) == frozenset()
    assert special_corners({(1, 1)}) == frozenset()


# ---------------------------------------------------------------------------
# validation failure codes, one probe each


def expect_code(shape, strips, code):
    report = validate_decomposition(Decomposition(shape, strips))
    assert not report.ok
    assert report.code == code, (report.code, report.message)
    return report


def test_validate_no_strips():
    expect_code(SkewShape((1,)), (), "no-strips")


def test_validate_not_thickened():
    expect_code(SkewShape((3, 3)), (frozenset(SkewShape((3, 3)).boxes),),
                "strip-not-thickened")


def test_validate_union_mismatch():
    expect_code(SkewShape((2, 2)), ({(1, 1), (1, 2)},), "union-mismatch")


def test_validate_overlap_too_deep():
    expect_code(SkewShape((1,)), ({(1, 1)}, {(1, 1)}, {(1, 1)}), "overlap-too-deep")


def test_validate_bad_start():
    report = expect_code(INVALID_SHAPE, INVALID_START_STRIPS,
                         "start-not-on-left-or-bottom")
    assert report.boxes == ((2, 4),)


def test_validate_bad_end():
    report = expect_code(INVALID_SHAPE, INVALID_END_STRIPS, "end-not-on-right-or-top")
    assert report.boxes == ((3, 4),)


def test_validate_single_box_share():
    hook = frozenset({(2, 1), (2, 2), (1, 2)})
    expect_code(SkewShape((2, 2), (1,)), (hook, {(2, 1)}), "single-box-share")


def test_validate_share_not_special():
    expect_code(
        SkewShape((4,)),
        ({(1, 1), (1, 2), (1, 3)}, {(1, 2), (1, 3), (1, 4)}),
        "share-not-special-corner",
    )


def test_validate_share_orientation():
    expect_code(
        SkewShape((2, 1)),
        ({(2, 1), (1, 1)}, {(1, 1), (1, 2)}),
        "share-orientation",
    )


def test_invalid_examples_are_well_formed_covers():
    # both invalid covers really do tile the shape; only the perimeter
    # rule is broken
    for strips in (INVALID_START_STRIPS, INVALID_END_STRIPS):
        union = set()
        total = 0
        for s in strips:
            assert is_thickened_strip(s)
            union |= s
            total += len(s)
        assert union == INVALID_SHAPE.boxes
        assert total == INVALID_SHAPE.size
