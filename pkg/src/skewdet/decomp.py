"""Outside decompositions of skew shapes into thickened strips.

A decomposition covers a skew shape with thickened strips whose walks enter
on the left-or-bottom perimeter and leave on the right-or-top perimeter.
Strips may overlap pairwise in single boxes, and each overlap box must be a
special corner of both strips, a lower corner of the one the other sits
right-or-below of and an upper corner of that other.  The machinery here
derives corners, box directions, the nestedness test, the thickened cutting
strip with its content addressing, and the # composition of two strips as a
segment of that cutting strip.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .shapes import (
    BOTTOM,
    LEFT,
    RIGHT,
    TOP,
    Box,
    SkewShape,
    boxes_to_skew,
    content,
    is_edgewise_connected,
    is_thickened_strip,
    perimeter_class,
)

RIGHT_DIR = "R"
UP_DIR = "U"
RIGHT_UP_DIR = "RU"

# y-coordinate sentinel for endpoints on the top edge of the path picture
INF = None


def strip_start(strip) -> Box:
    """The walk's first box: the unique box of minimal content."""
    lo = min(content(b) for b in strip)
    cands = [b for b in strip if content(b) == lo]
    if len(cands) != 1:
        raise ValueError(f"ambiguous starting box among {cands}")
    return cands[0]


def strip_end(strip) -> Box:
    hi = max(content(b) for b in strip)
    cands = [b for b in strip if content(b) == hi]
    if len(cands) != 1:
        raise ValueError(f"ambiguous ending box among {cands}")
    return cands[0]


def upper_corners(strip) -> frozenset[Box]:
    """Boxes with no strip box above and none to the left; single-box
    strips have no corners at all."""
    strip = frozenset(strip)
    if len(strip) <= 1:
        return frozenset()
    return frozenset(
        (s, t) for s, t in strip if (s - 1, t) not in strip and (s, t - 1) not in strip
    )


def lower_corners(strip) -> frozenset[Box]:
    strip = frozenset(strip)
    if len(strip) <= 1:
        return frozenset()
    return frozenset(
        (s, t) for s, t in strip if (s + 1, t) not in strip and (s, t + 1) not in strip
    )


def _in_2x2(strip, box) -> bool:
    s, t = box
    for ds in (0, -1):
        for dt in (0, -1):
            block = {(s + ds + a, t + dt + b) for a in (0, 1) for b in (0, 1)}
            if block <= strip:
                return True
    return False


def special_corners(strip) -> frozenset[Box]:
    """Corners that are the starting/ending box or sit in a 2x2 block."""
    strip = frozenset(strip)
    corners = upper_corners(strip) | lower_corners(strip)
    if not corners:
        return frozenset()
    ends = {strip_start(strip), strip_end(strip)}
    return frozenset(b for b in corners if b in ends or _in_2x2(strip, b))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    code: str = ""
    message: str = ""
    boxes: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Decomposition:
    shape: SkewShape
    strips: tuple[frozenset[Box], ...]

    def __init__(self, shape, strips):
        object.__setattr__(self, "shape", shape)
        object.__setattr__(
            self, "strips", tuple(frozenset(s) for s in strips)
        )

    @property
    def g(self) -> int:
        return len(self.strips)

    @cached_property
    def shared_boxes(self) -> dict[Box, tuple[int, ...]]:
        """box -> indices of the strips containing it, for overlap boxes."""
        owners: dict[Box, list[int]] = {}
        for i, strip in enumerate(self.strips):
            for b in strip:
                owners.setdefault(b, []).append(i)
        return {b: tuple(idx) for b, idx in owners.items() if len(idx) > 1}

    @property
    def r(self) -> int:
        return len(self.shared_boxes)

    @cached_property
    def all_special_corners(self) -> frozenset[Box]:
        out = set()
        for strip in self.strips:
            out |= special_corners(strip)
        return frozenset(out)

    def owners_of(self, box: Box) -> tuple[int, ...]:
        return tuple(i for i, s in enumerate(self.strips) if box in s)


def enriched_strip(d: Decomposition, i: int) -> frozenset[Box]:
    """The strip with its shared-endpoint padding.

    When the starting or ending box of strip i is one of its lower/upper
    corners and simultaneously the opposite kind of corner of another strip,
    the strip is padded with the up-to-three boxes completing the 2x2 block
    on its own side of that corner.
    """
    strip = self_strip = d.strips[i]
    out = set(strip)
    for box in (strip_start(strip), strip_end(strip)):
        s, t = box
        is_lower = box in lower_corners(self_strip)
        is_upper = box in upper_corners(self_strip)
        for j, other in enumerate(d.strips):
            if j == i or box not in other:
                continue
            if is_lower and box in upper_corners(other):
                out.update({(s, t - 1), (s - 1, t), (s - 1, t - 1)})
            if is_upper and box in lower_corners(other):
                out.update({(s, t + 1), (s + 1, t), (s + 1, t + 1)})
    return frozenset(out)


def box_direction(d: Decomposition, i: int, box: Box) -> str:
    """Which way strip i continues out of one of its boxes.

    Special corners carry directions too, one per owning strip; a box
    shared by two strips can answer differently for each owner.
    """
    return _direction(d, i, enriched_strip(d, i), box)


def _direction(d: Decomposition, i: int, padded: frozenset[Box], box: Box) -> str:
    s, t = box
    up = (s - 1, t) in padded
    right = (s, t + 1) in padded
    if up and right:
        return RIGHT_UP_DIR
    if right:
        return RIGHT_DIR
    if up:
        return UP_DIR
    # neither: the walk stops here, so this is the ending box; it leaves
    # the shape upward from the top perimeter, rightward otherwise
    if box != strip_end(d.strips[i]):
        raise ValueError(f"directionless interior box {box} in strip {i}")
    if TOP in perimeter_class(d.shape.boxes, box):
        return UP_DIR
    return RIGHT_DIR


def _box_directions(d: Decomposition):
    """box -> set of directions, one contributed by each owning strip."""
    out: dict[Box, set[str]] = {}
    for i, strip in enumerate(d.strips):
        padded = enriched_strip(d, i)
        for b in strip:
            out.setdefault(b, set()).add(_direction(d, i, padded, b))
    return out


def is_nested(d: Decomposition) -> bool:
    """Diagonal-by-diagonal coherence of the strip directions.

    Content c passes when every box on it is a special corner, when the
    next diagonal up is nonempty and entirely special corners, or when
    the directions of its boxes agree: no box strictly rightward next to
    a box strictly upward, counting every direction a shared box gets
    from its owners, with both-ways boxes compatible with either side.
    """
    boxes = d.shape.boxes
    if not boxes:
        return True
    specials = d.all_special_corners
    dirs = _box_directions(d)
    by_content: dict[int, list[Box]] = {}
    for b in boxes:
        by_content.setdefault(content(b), []).append(b)
    for c, diag in by_content.items():
        if all(b in specials for b in diag):
            continue
        nxt = by_content.get(c + 1)
        if nxt and all(b in specials for b in nxt):
            continue
        joined = set().union(*(dirs[b] for b in diag))
        if RIGHT_DIR in joined and UP_DIR in joined:
            return False
    return True


def endpoint_u(d: Decomposition, j: int):
    """Starting point of strip j's path: (x, 1) or (x, INF)."""
    strip = d.strips[j]
    box = strip_start(strip)
    c = content(box)
    if box in d.shared_boxes:
        if box in lower_corners(strip):
            return (c, 1)
        if box in upper_corners(strip):
            return (c, INF)
        raise ValueError(f"shared starting box {box} is not a corner")
    flags = perimeter_class(d.shape.boxes, box)
    if LEFT in flags:
        return (c, 1)
    if BOTTOM in flags:
        return (c, INF)
    raise ValueError(f"starting box {box} not on the left or bottom perimeter")


def endpoint_v(d: Decomposition, i: int):
    """Ending point of strip i's path: (x, 1) or (x, INF)."""
    strip = d.strips[i]
    box = strip_end(strip)
    c = content(box)
    if box in d.shared_boxes:
        if box in lower_corners(strip):
            return (c + 1, 1)
        if box in upper_corners(strip):
            return (c + 1, INF)
        raise ValueError(f"shared ending box {box} is not a corner")
    flags = perimeter_class(d.shape.boxes, box)
    if RIGHT in flags:
        return (c + 1, INF)
    if TOP in flags:
        return (c + 1, 1)
    raise ValueError(f"ending box {box} not on the right or top perimeter")


def _u_key(point):
    x, y = point
    return (0, -x) if y is INF else (1, x)


def _v_key(point):
    x, y = point
    return (0, x) if y is INF else (1, -x)


def canonical_order(d: Decomposition) -> Decomposition:
    """Strips sorted by starting point, bottom-left first.

    For nested decompositions the ending points come out in the same
    order, so both path families are simultaneously increasing.
    """
    order = sorted(range(d.g), key=lambda i: _u_key(endpoint_u(d, i)))
    return Decomposition(d.shape, tuple(d.strips[i] for i in order))


def endpoint_orders_agree(d: Decomposition) -> bool:
    """Whether sorting strips by starting point also sorts their ending
    points, with all endpoints distinct.

    Nestedness alone does not guarantee this: a decomposition whose strips
    interleave around a detached corner can be nested diagonal-by-diagonal
    while its path endpoints cross.  The determinant identity needs the
    agreeing order, so this is checked separately.
    """
    us = [endpoint_u(d, i) for i in range(d.g)]
    vs = [endpoint_v(d, i) for i in range(d.g)]
    if len(set(us)) != d.g or len(set(vs)) != d.g:
        return False
    u_order = sorted(range(d.g), key=lambda i: _u_key(us[i]))
    v_order = sorted(range(d.g), key=lambda i: _v_key(vs[i]))
    return u_order == v_order


def blocks_share_anchored(d: Decomposition) -> bool:
    """Every 2x2 block lying inside a single strip contains a shared box.

    A block entirely owned by one strip and touching no shared corner has
    no address anchor in the cutting strip, and the sharp segments around
    it stop matching the tableau counts.
    """
    shared = set(d.shared_boxes)
    for strip in d.strips:
        for s, t in strip:
            block = {(s, t), (s + 1, t), (s, t + 1), (s + 1, t + 1)}
            if block <= strip and not (block & shared):
                return False
    return True


def shares_symmetric(d: Decomposition) -> bool:
    """Each shared box is an endpoint of both owners or interior to both.

    A box that starts or ends one strip while sitting mid-walk in the
    other desynchronizes the two walks through it, and the determinant
    identity fails even though the cover itself is legal.
    """
    ends = [{strip_start(s), strip_end(s)} for s in d.strips]
    for box, owners in d.shared_boxes.items():
        if len({box in ends[i] for i in owners}) == 2:
            return False
    return True


def in_identity_domain(d: Decomposition) -> bool:
    """Whether the determinant identities apply to this decomposition.

    Requires nestedness, a fully defined sharp table, agreeing endpoint
    orders, share-anchored blocks, and symmetric shares.  Each condition
    is necessary: dropping any one of them admits small decompositions
    (eight boxes or fewer) whose determinant no longer matches the count.
    """
    return (
        is_nested(d)
        and sharp_defined(d)
        and endpoint_orders_agree(d)
        and blocks_share_anchored(d)
        and shares_symmetric(d)
    )


def validate_decomposition(d: Decomposition) -> ValidationReport:
    """Structural validity of an outside decomposition, first failure wins."""
    if not d.strips:
        return ValidationReport(False, "no-strips", "decomposition has no strips")
    for i, strip in enumerate(d.strips):
        if not strip:
            return ValidationReport(False, "empty-strip", f"strip {i} is empty")
        if not is_thickened_strip(strip):
            return ValidationReport(
                False,
                "strip-not-thickened",
                f"strip {i} is not a thickened strip",
                tuple(sorted(strip)),
            )
    shape_boxes = d.shape.boxes
    union = set()
    for strip in d.strips:
        union |= strip
    if union != shape_boxes:
        off = tuple(sorted(union.symmetric_difference(shape_boxes)))
        return ValidationReport(
            False, "union-mismatch", "strips do not cover the shape exactly", off
        )
    for b, owners in _overlap_counts(d).items():
        if len(owners) > 2:
            return ValidationReport(
                False, "overlap-too-deep", f"box {b} lies in {len(owners)} strips", (b,)
            )
    for i, strip in enumerate(d.strips):
        start, end = strip_start(strip), strip_end(strip)
        if not perimeter_class(shape_boxes, start) & {LEFT, BOTTOM}:
            return ValidationReport(
                False,
                "start-not-on-left-or-bottom",
                f"strip {i} starts at {start}, off the left/bottom perimeter",
                (start,),
            )
        if not perimeter_class(shape_boxes, end) & {RIGHT, TOP}:
            return ValidationReport(
                False,
                "end-not-on-right-or-top",
                f"strip {i} ends at {end}, off the right/top perimeter",
                (end,),
            )
    # single-box strips may not sit on another strip's special corner
    for i, strip in enumerate(d.strips):
        if len(strip) == 1:
            (box,) = strip
            for j, other in enumerate(d.strips):
                if j != i and box in special_corners(other):
                    return ValidationReport(
                        False,
                        "single-box-share",
                        f"strip {i} is the single box {box}, a special corner "
                        f"of strip {j}",
                        (box,),
                    )
    # pairwise overlaps: special corners with one consistent orientation
    pairs: dict[tuple[int, int], list[Box]] = {}
    for b, owners in d.shared_boxes.items():
        pairs.setdefault(owners, []).append(b)
    for (i, j), shared in pairs.items():
        for b in shared:
            if b not in special_corners(d.strips[i]) or b not in special_corners(
                d.strips[j]
            ):
                return ValidationReport(
                    False,
                    "share-not-special-corner",
                    f"box {b} shared by strips {i} and {j} is not a special "
                    f"corner of both",
                    (b,),
                )
        lower_i = all(
            b in lower_corners(d.strips[i]) and b in upper_corners(d.strips[j])
            for b in shared
        )
        lower_j = all(
            b in lower_corners(d.strips[j]) and b in upper_corners(d.strips[i])
            for b in shared
        )
        if not (lower_i or lower_j):
            return ValidationReport(
                False,
                "share-orientation",
                f"strips {i} and {j} share corners without one consistent "
                f"lower/upper orientation",
                tuple(sorted(shared)),
            )
    # endpoint computation must succeed (defensive; the share checks above
    # already force shared endpoints to be corners)
    try:
        for i in range(d.g):
            endpoint_u(d, i)
            endpoint_v(d, i)
    except ValueError as err:
        return ValidationReport(False, "endpoint", str(err))
    return ValidationReport(True)


def _overlap_counts(d: Decomposition) -> dict[Box, tuple[int, ...]]:
    owners: dict[Box, list[int]] = {}
    for i, strip in enumerate(d.strips):
        for b in strip:
            owners.setdefault(b, []).append(i)
    return {b: tuple(o) for b, o in owners.items()}


# ---------------------------------------------------------------------------
# cutting strip


@dataclass(frozen=True)
class CuttingStrip:
    """The common walk of a nested decomposition.

    boxes includes the padding boxes the doubled extreme contents force
    (without them the walk is not a skew shape); address maps (content,) or
    (content, '+'/'-') to real walk boxes and never to padding.
    """

    boxes: frozenset[Box]
    address: dict
    phantoms: frozenset[Box]
    span: tuple[int, int]

    def boxes_at(self, c: int) -> tuple[Box, ...]:
        out = []
        for key in ((c,), (c, "+"), (c, "-")):
            if key in self.address:
                out.append(self.address[key])
        return tuple(out)

    def is_doubled(self, c: int) -> bool:
        return (c, "+") in self.address


def _doubled_contents(d: Decomposition) -> set[int]:
    doubled = set()
    for strip in d.strips:
        seen: dict[int, int] = {}
        for b in strip:
            c = content(b)
            seen[c] = seen.get(c, 0) + 1
        doubled |= {c for c, k in seen.items() if k == 2}
    doubled |= {content(b) for b in d.shared_boxes}
    return doubled


def _walk_direction(d: Decomposition, c: int) -> str:
    """Direction the cutting strip leaves diagonal c by."""
    specials = d.all_special_corners
    dirs = set()
    for i, strip in enumerate(d.strips):
        for b in strip:
            if content(b) == c and b not in specials:
                dirs.add(box_direction(d, i, b))
    dirs.discard(RIGHT_UP_DIR)
    if len(dirs) == 1:
        return dirs.pop()
    if dirs:
        raise ValueError(f"incoherent directions {dirs} on diagonal {c}")
    # every box on the diagonal is special or ambidextrous: fall back to how
    # some strip actually continues from content c to c+1, or to the side an
    # unshared strip endpoint forces the walk to exit or enter the shape by
    evidence = set()
    shape_boxes = d.shape.boxes
    free_ends = []
    for strip in d.strips:
        for s, t in strip:
            if t - s == c:
                if (s, t + 1) in strip:
                    evidence.add(RIGHT_DIR)
                if (s - 1, t) in strip:
                    evidence.add(UP_DIR)
        end = strip_end(strip)
        if end not in d.shared_boxes and content(end) == c:
            s, t = end
            right_in = (s, t + 1) in shape_boxes
            up_in = (s - 1, t) in shape_boxes
            if right_in and not up_in:
                evidence.add(UP_DIR)
            elif up_in and not right_in:
                evidence.add(RIGHT_DIR)
            elif not right_in and not up_in:
                free_ends.append(end)
        start = strip_start(strip)
        if start not in d.shared_boxes and content(start) == c + 1:
            s, t = start
            if (s, t - 1) in shape_boxes and (s + 1, t) not in shape_boxes:
                evidence.add(UP_DIR)
            elif (s + 1, t) in shape_boxes and (s, t - 1) not in shape_boxes:
                evidence.add(RIGHT_DIR)
    if len(evidence) == 1:
        return evidence.pop()
    if not evidence and free_ends:
        s, t = min(free_ends)
        return UP_DIR if (s - 1, t) not in shape_boxes else RIGHT_DIR
    raise ValueError(f"cannot orient diagonal {c}: evidence {sorted(evidence)}")


def thickened_cutting_strip(d: Decomposition) -> CuttingStrip:
    """Superimpose the strips of a nested decomposition into one walk.

    Contents run from the shape's smallest diagonal to its largest; a
    content is doubled exactly when a strip covers it twice or a shared
    corner lies on it.  Doubling at the extreme contents forces one padding
    box beyond the walk so the result stays a skew shape.
    """
    boxes = d.shape.boxes
    cs = sorted({content(b) for b in boxes})
    c_min, c_max = cs[0], cs[-1]
    if cs != list(range(c_min, c_max + 1)):
        raise ValueError("shape has a gap diagonal; not a connected shape")
    doubled = _doubled_contents(d)
    address: dict = {}
    phantoms = set()
    cur = None  # box of the previous content, or preplaced current box
    preplaced = False
    for c in range(c_min, c_max + 1):
        if c in doubled:
            if c + 1 in doubled:
                raise ValueError(f"adjacent doubled diagonals {c}, {c + 1}")
            if cur is None:
                pred = (1, c)
                phantoms.add(pred)
            else:
                pred = cur
            s, t = pred
            address[(c, "-")] = (s, t + 1)
            address[(c, "+")] = (s - 1, t)
            cur = (s - 1, t + 1)
            preplaced = True
        else:
            if cur is None:
                cur = (0, c)
            elif preplaced:
                pass  # cur is already this content's box
            else:
                s, t = cur
                cur = (s, t + 1) if _walk_direction(d, c - 1) == RIGHT_DIR else (s - 1, t)
            address[(c,)] = cur
            preplaced = False
    if preplaced:
        phantoms.add(cur)
    all_boxes = frozenset(address.values()) | frozenset(phantoms)
    if not is_thickened_strip(all_boxes):
        raise ValueError("walk did not close into a thickened strip")
    return CuttingStrip(all_boxes, address, frozenset(phantoms), (c_min, c_max))


def start_address(d: Decomposition, i: int):
    """Address of strip i's starting box in the cutting strip."""
    strip = d.strips[i]
    box = strip_start(strip)
    c = content(box)
    if box in d.shared_boxes:
        return (c, "+") if box in upper_corners(strip) else (c, "-")
    return (c,)


def end_address(d: Decomposition, i: int):
    strip = d.strips[i]
    box = strip_end(strip)
    c = content(box)
    if box in d.shared_boxes:
        return (c, "+") if box in upper_corners(strip) else (c, "-")
    return (c,)


UNDEFINED = None


def sharp(d: Decomposition, i: int, j: int, H: CuttingStrip = None):
    """The # composition of strips i and j as a cutting-strip segment.

    Returns the segment's box set; the empty frozenset when the segment
    degenerates; UNDEFINED (None) when the starting address lies beyond the
    ending address by more than one diagonal.
    """
    if H is None:
        H = thickened_cutting_strip(d)
    p_key = start_address(d, j)
    q_key = end_address(d, i)
    cp, cq = p_key[0], q_key[0]
    try:
        p_box, q_box = H.address[p_key], H.address[q_key]
    except KeyError:
        raise ValueError(
            f"strip endpoint {p_key if p_key not in H.address else q_key} "
            "has no address in the cutting strip"
        ) from None
    if cp < cq or p_box == q_box:
        seg = {p_box, q_box}
        for key, box in H.address.items():
            if cp < key[0] < cq:
                seg.add(box)
        return frozenset(seg)
    if cp == cq or cp == cq + 1:
        return frozenset()
    return UNDEFINED


def sharp_defined(d: Decomposition) -> bool:
    """Whether the # composition exists for every pair of strips.

    Needs a cutting strip that orients every diagonal and addresses every
    strip endpoint.  A valid nested decomposition can still fail: an
    unshared endpoint on a doubled diagonal has no address, and diagonals
    can carry conflicting endpoint constraints.
    """
    try:
        H = thickened_cutting_strip(d)
    except ValueError:
        return False
    return all(
        start_address(d, i) in H.address and end_address(d, i) in H.address
        for i in range(d.g)
    )


# ---------------------------------------------------------------------------
# exhaustive enumeration and peels


def thickened_strips_within(container, thin_only=False):
    """Every thickened strip that fits inside the given box set.

    Walks grow along increasing content; a doubled diagonal is entered
    through its whole 2x2 block, which keeps every emitted set skew.  With
    thin_only the doubling move is disabled and only ordinary strips come
    out.
    """
    container = frozenset(container)
    out = []

    def grow(boxes, cur):
        out.append(frozenset(boxes))
        s, t = cur
        for nxt in ((s, t + 1), (s - 1, t)):
            if nxt in container:
                boxes.append(nxt)
                grow(boxes, nxt)
                boxes.pop()
        if thin_only:
            return
        block = ((s - 1, t), (s, t + 1), (s - 1, t + 1))
        if all(b in container for b in block):
            boxes.extend(block)
            grow(boxes, block[2])
            del boxes[-3:]

    for start in sorted(container):
        grow([start], start)
    return out


def strip_candidates(shape: SkewShape, thin_only=False):
    """Strips inside the shape with perimeter-legal start and end."""
    boxes = shape.boxes
    cands = []
    for strip in thickened_strips_within(boxes, thin_only):
        if perimeter_class(boxes, strip_start(strip)) & {LEFT, BOTTOM} and (
            perimeter_class(boxes, strip_end(strip)) & {RIGHT, TOP}
        ):
            cands.append(strip)
    cands.sort(key=sorted)
    return cands


def enumerate_nested_decompositions(
    shape: SkewShape,
    max_g: int,
    *,
    thin_only=False,
    allowed_shares=None,
    require_nested=True,
):
    """Depth-first stream of the shape's outside nested decompositions.

    Covers grow one strip at a time, always through the smallest uncovered
    box, with the overlap rules pruned eagerly; full validation runs once
    per completed cover.  Exponential in general, intended for oracle-scale
    shapes of roughly 14 boxes or fewer.

    allowed_shares restricts which boxes may be covered twice.  With
    require_nested=False the stream carries every valid outside
    decomposition; the default keeps only those in the identity domain,
    the class the determinant identities speak about.
    """
    boxes = shape.boxes
    if not boxes:
        return
    cands = strip_candidates(shape, thin_only)
    uppers = {s: upper_corners(s) for s in cands}
    lowers = {s: lower_corners(s) for s in cands}
    specials = {s: special_corners(s) for s in cands}
    by_box = {b: [] for b in boxes}
    for s in cands:
        for b in s:
            by_box[b].append(s)
    if any(not lst for lst in by_box.values()):
        return
    seen = set()
    chosen = []
    cover = {}

    def compatible(cand):
        for b in cand:
            n = cover.get(b, 0)
            if not n:
                continue
            if n > 1:
                return False
            if allowed_shares is not None and b not in allowed_shares:
                return False
            if b not in specials[cand]:
                return False
        for other in chosen:
            inter = cand & other
            if not inter:
                continue
            if any(b not in specials[other] for b in inter):
                return False
            down = all(b in lowers[cand] and b in uppers[other] for b in inter)
            up = all(b in uppers[cand] and b in lowers[other] for b in inter)
            if not (down or up):
                return False
        return True

    def dfs():
        uncovered = [b for b in boxes if b not in cover]
        if not uncovered:
            key = frozenset(chosen)
            if key in seen:
                return
            seen.add(key)
            d = canonical_order(Decomposition(shape, tuple(chosen)))
            if not validate_decomposition(d).ok:
                return
            if require_nested and not in_identity_domain(d):
                return
            yield d
            return
        if len(chosen) >= max_g:
            return
        pivot = min(uncovered)
        for cand in by_box[pivot]:
            if compatible(cand):
                chosen.append(cand)
                for b in cand:
                    cover[b] = cover.get(b, 0) + 1
                yield from dfs()
                for b in cand:
                    cover[b] -= 1
                    if not cover[b]:
                        del cover[b]
                chosen.pop()

    yield from dfs()


def find_decompositions_by_corners(shape: SkewShape, corners, max_g: int):
    """Nested decompositions whose shared-corner set is exactly `corners`."""
    corners = frozenset(corners)
    return [
        d
        for d in enumerate_nested_decompositions(
            shape, max_g, allowed_shares=corners
        )
        if frozenset(d.shared_boxes) == corners
    ]


def _edge_components(boxes):
    todo = set(boxes)
    comps = []
    while todo:
        queue = [todo.pop()]
        comp = set(queue)
        while queue:
            s, t = queue.pop()
            for nb in ((s + 1, t), (s - 1, t), (s, t + 1), (s, t - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    queue.append(nb)
        comps.append(frozenset(comp))
    return comps


def _rim_walk_directions(shape):
    # direction the outer rim takes leaving each diagonal; the rim is thin
    # and meets every content exactly once, so this is a function
    boxes = shape.boxes
    rim = {b for b in boxes if (b[0] + 1, b[1] + 1) not in boxes}
    dirs = {}
    for s, t in rim:
        if (s, t + 1) in rim:
            dirs[t - s] = RIGHT_DIR
        elif (s - 1, t) in rim:
            dirs[t - s] = UP_DIR
    return dirs


def _induced_thin_strips(shape, dirs):
    # partition into the thin strips that follow dirs, one direction per
    # diagonal; a strip starts wherever the incoming step leaves the shape
    boxes = shape.boxes

    def succ(b):
        s, t = b
        return (s, t + 1) if dirs.get(t - s) == RIGHT_DIR else (s - 1, t)

    def pred(b):
        s, t = b
        return (s, t - 1) if dirs.get(t - s - 1) == RIGHT_DIR else (s + 1, t)

    strips = []
    for b in sorted(boxes):
        if pred(b) in boxes:
            continue
        strip = [b]
        while succ(strip[-1]) in boxes:
            strip.append(succ(strip[-1]))
        strips.append(frozenset(strip))
    return tuple(strips)


def peel_rim(shape: SkewShape) -> Decomposition:
    """Outside decomposition into disjoint thin strips.

    All strips follow one direction per diagonal, so the outermost strip is
    the shape's rim whenever the rim walk itself is nested.  A rim walk can
    strand a strip endpoint on a diagonal with plain boxes; the walk is then
    bent at as few diagonals as possible until every diagonal is coherent.

    Some shapes admit no nested thin decomposition at all: a strip starting
    mid-shape is special whenever it continues rightward, and long plain
    runs can cross every such diagonal no matter how the walk bends.  Those
    shapes fall back to the plain rim-layer decomposition, which is always
    valid but not nested.
    """
    if not shape.boxes:
        raise ValueError("cannot peel an empty shape")
    if not is_edgewise_connected(shape.boxes):
        raise ValueError("shape is not edgewise connected")
    rim_dirs = _rim_walk_directions(shape)
    contents = sorted(rim_dirs)
    flip = {RIGHT_DIR: UP_DIR, UP_DIR: RIGHT_DIR}
    # full search is affordable for the sizes this library targets; bigger
    # spans only get the rim walk itself before falling back
    masks = range(1 << len(contents)) if len(contents) <= 16 else (0,)
    for mask in sorted(masks, key=lambda m: (m.bit_count(), m)):
        dirs = dict(rim_dirs)
        for i, c in enumerate(contents):
            if mask >> i & 1:
                dirs[c] = flip[dirs[c]]
        d = Decomposition(shape, _induced_thin_strips(shape, dirs))
        if validate_decomposition(d).ok and is_nested(d):
            return canonical_order(d)
    fallback = Decomposition(shape, _induced_thin_strips(shape, rim_dirs))
    return canonical_order(fallback)


def peel_thick_rim(shape: SkewShape) -> Decomposition:
    """Outside nested decomposition into maximal outer thickened strips.

    Each round thickens the current rim with the inner boxes completing a
    2x2 block inside it, then leaves behind, shared, the upper corners of
    the peeled strip that still touch the rest of the shape; those corners
    are covered again by the next round's strips.

    On narrow shapes a kept corner can fail to be special in the strip it
    was peeled from, or the rounds can misalign diagonals; the peel then
    falls back to the smallest nested decomposition the enumerator finds.
    """
    region = set(shape.boxes)
    if not region:
        raise ValueError("cannot peel an empty shape")
    if not is_edgewise_connected(shape.boxes):
        raise ValueError("shape is not edgewise connected")
    strips = []
    while region:
        rim = {b for b in region if (b[0] + 1, b[1] + 1) not in region}
        absorb = {
            (s, t)
            for (s, t) in region - rim
            if {(s, t + 1), (s + 1, t), (s + 1, t + 1)} <= rim
        }
        rest = region - rim - absorb
        for strip in _edge_components(rim | absorb):
            strips.append(strip)
            keep = {
                (s, t)
                for (s, t) in upper_corners(strip)
                if {(s - 1, t), (s + 1, t), (s, t - 1), (s, t + 1)} & rest
            }
            rest |= keep
        region = rest
    d = canonical_order(Decomposition(shape, tuple(strips)))
    if validate_decomposition(d).ok and is_nested(d):
        return d
    for g in range(1, len(shape.boxes) + 1):
        for alt in enumerate_nested_decompositions(shape, g):
            return alt
    raise ValueError("no nested decomposition exists for this shape")
