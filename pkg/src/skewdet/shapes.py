"""Skew Young diagrams as box sets, with the geometry predicates the rest of
the package is built on.

Boxes live in matrix coordinates (row, col), both 1-based for honest shapes,
but every function here accepts arbitrary integer coordinates so that
translated fragments (cutting strips, rotated diagrams) can be handled
uniformly.  The content of box (i, j) is j - i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Box = tuple[int, int]

# perimeter flags
LEFT = "left"
RIGHT = "right"
TOP = "top"
BOTTOM = "bottom"


def content(box: Box) -> int:
    return box[1] - box[0]


def as_partition(parts) -> tuple[int, ...]:
    """Normalize a weakly decreasing sequence of non-negative ints, dropping
    trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram lambda/mu.  mu is zero-padded to the length of lambda;
    mu must fit inside lambda."""

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __init__(self, lam, mu=()):
        lam = as_partition(lam)
        mu = as_partition(mu)
        if len(mu) > len(lam):
            raise ValueError(f"inner shape longer than outer: {mu} vs {lam}")
        mu = mu + (0,) * (len(lam) - len(mu))
        if any(m > l for l, m in zip(lam, mu)):
            raise ValueError(f"inner shape not contained: {mu} in {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def boxes(self) -> frozenset[Box]:
        return _skew_boxes(self.lam, self.mu)

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def __str__(self):
        if not self.lam:
            return "empty"
        lam = ",".join(map(str, self.lam))
        mu = tuple(m for m in self.mu if m)
        if not mu:
            return f"({lam})"
        return f"({lam})/({','.join(map(str, self.mu))})"


@lru_cache(maxsize=None)
def _skew_boxes(lam, mu) -> frozenset[Box]:
    return frozenset(
        (i + 1, j) for i in range(len(lam)) for j in range(mu[i] + 1, lam[i] + 1)
    )


def skew_boxes(shape: SkewShape) -> frozenset[Box]:
    return _skew_boxes(shape.lam, shape.mu)


def _neighbors(box: Box):
    s, t = box
    return ((s - 1, t), (s + 1, t), (s, t - 1), (s, t + 1))


def is_edgewise_connected(boxes) -> bool:
    """Connected through shared edges; the empty set counts as connected."""
    boxes = frozenset(boxes)
    if not boxes:
        return True
    seen = set()
    stack = [next(iter(boxes))]
    while stack:
        b = stack.pop()
        if b in seen:
            continue
        seen.add(b)
        stack.extend(n for n in _neighbors(b) if n in boxes and n not in seen)
    return len(seen) == len(boxes)


def has_block(boxes, height: int, width: int) -> bool:
    """Does the box set contain a full height x width rectangle?"""
    boxes = frozenset(boxes)
    for s, t in boxes:
        if all(
            (s + ds, t + dt) in boxes for ds in range(height) for dt in range(width)
        ):
            return True
    return False


def is_skew_box_set(boxes) -> bool:
    """Is this box set a translate of some skew diagram?

    Rows must be contiguous intervals; going down, both endpoints of the
    row intervals move weakly left; a row absent between occupied rows is
    only consistent with a skew diagram if the lower block lies strictly
    left of the upper one (the diagram is then disconnected).
    """
    boxes = frozenset(boxes)
    if not boxes:
        return True
    rows: dict[int, list[int]] = {}
    for s, t in boxes:
        rows.setdefault(s, []).append(t)
    intervals = {}
    for s, cols in rows.items():
        lo, hi = min(cols), max(cols)
        if len(cols) != hi - lo + 1:
            return False
        intervals[s] = (lo, hi)
    occupied = sorted(intervals)
    for a, b in zip(occupied, occupied[1:]):
        lo_a, hi_a = intervals[a]
        lo_b, hi_b = intervals[b]
        if b == a + 1:
            if lo_b > lo_a or hi_b > hi_a:
                return False
        else:
            # gap row: in lambda/mu a skipped row forces everything below
            # to sit strictly left of everything above
            if hi_b >= lo_a:
                return False
    return True


def boxes_to_skew(boxes) -> SkewShape:
    """Translate a skew box set to canonical position (top row 1, min mu 0)
    and read off lambda/mu."""
    boxes = frozenset(boxes)
    if not boxes:
        return SkewShape(())
    if not is_skew_box_set(boxes):
        raise ValueError("not a skew box set")
    rows: dict[int, list[int]] = {}
    for s, t in boxes:
        rows.setdefault(s, []).append(t)
    top, bottom = min(rows), max(rows)
    shift = min(min(cols) for cols in rows.values()) - 1
    lam, mu = [], []
    fill = 0
    for s in range(bottom, top - 1, -1):
        if s in rows:
            lo, hi = min(rows[s]) - shift, max(rows[s]) - shift
            lam.append(hi)
            mu.append(lo - 1)
            fill = hi
        else:
            # empty row inside the diagram: pad so the partition stays valid
            lam.append(fill)
            mu.append(fill)
    lam.reverse()
    mu.reverse()
    return SkewShape(tuple(lam), tuple(mu))


def perimeter_class(boxes, box: Box) -> frozenset[str]:
    """Which perimeter sides of the box set the box touches.

    Left: no box directly left.  Right: none directly right.  Top: none
    directly above.  Bottom: none directly below.  Interior boxes get the
    empty set.
    """
    boxes = frozenset(boxes)
    if box not in boxes:
        raise ValueError(f"{box} not in box set")
    s, t = box
    flags = set()
    if (s, t - 1) not in boxes:
        flags.add(LEFT)
    if (s, t + 1) not in boxes:
        flags.add(RIGHT)
    if (s - 1, t) not in boxes:
        flags.add(TOP)
    if (s + 1, t) not in boxes:
        flags.add(BOTTOM)
    return frozenset(flags)


def rotate180_boxes(boxes) -> frozenset[Box]:
    return frozenset((-s, -t) for s, t in boxes)


def rotate180(shape: SkewShape) -> SkewShape:
    return boxes_to_skew(rotate180_boxes(shape.boxes))


def is_strip(boxes) -> bool:
    """A strip: edgewise connected skew box set with no 2x2 block."""
    boxes = frozenset(boxes)
    return (
        bool(boxes)
        and is_edgewise_connected(boxes)
        and is_skew_box_set(boxes)
        and not has_block(boxes, 2, 2)
    )


def is_thickened_strip(boxes) -> bool:
    """A thickened strip: connected skew box set with no 3x2 and no 2x3
    block (2x2 blocks are allowed)."""
    boxes = frozenset(boxes)
    return (
        bool(boxes)
        and is_edgewise_connected(boxes)
        and is_skew_box_set(boxes)
        and not has_block(boxes, 3, 2)
        and not has_block(boxes, 2, 3)
    )


def diagonal(boxes, c: int) -> frozenset[Box]:
    return frozenset(b for b in boxes if content(b) == c)


def content_span(boxes) -> tuple[int, int]:
    cs = [content(b) for b in boxes]
    return min(cs), max(cs)


def compositions(n: int):
    """All compositions of n into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def connected_skew_shapes(n: int):
    """All connected skew shapes with n boxes, one per translation class.

    A connected skew shape is determined by its row lengths r_1..r_k (top
    to bottom) plus, for each adjacent pair, the overlap o_i in
    [1, min(r_i, r_{i+1})] between the column ranges of rows i and i+1.
    """
    for comp in compositions(n):
        k = len(comp)

        def rec(i, lam_below, acc):
            if i < 0:
                lam = tuple(p[0] for p in acc)
                mu = tuple(p[1] for p in acc)
                yield SkewShape(lam, mu)
                return
            if i == k - 1:
                yield from rec(i - 1, comp[i], [(comp[i], 0)] + acc)
            else:
                for o in range(1, min(comp[i], comp[i + 1]) + 1):
                    mu_i = lam_below - o
                    lam_i = mu_i + comp[i]
                    yield from rec(i - 1, lam_i, [(lam_i, mu_i)] + acc)

        yield from rec(k - 1, 0, [])
