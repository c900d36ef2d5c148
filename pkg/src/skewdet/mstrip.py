"""Banded skew diagrams whose standard tableaux generalize up-down permutations.

An m-strip diagram is a band of n columns, each one row lower than its left
neighbour, with the top-left and bottom-right corners sliced off along a
diagonal and optional extra cells (a head and a tail) leaning against the
last and first columns.  For m = 2 the standard tableaux are the up-down
permutations counted by the Andre numbers; for general m an order-floor(m/2)
determinant with entries built from the 2-strip or 3-strip counts gives the
number of standard tableaux.  This module builds the diagrams, evaluates the
determinant, and carries the closed forms and recursions of the small cases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .decomp import Decomposition, validate_decomposition
from .polynomial import determinant_rational
from .shapes import SkewShape, as_partition, boxes_to_skew
from .tableaux import count_syt_aitken

__all__ = [
    "MStripSpec",
    "SequenceTable",
    "andre_numbers",
    "body_column_heights",
    "build_mstrip",
    "alpha2",
    "alpha3",
    "xy_numbers",
    "count_mstrip_thm",
    "ClosedForms",
    "closed_forms",
    "c3n_diagram",
    "d3_variants",
    "d3_plain_minus",
    "c3n_minus",
    "RecursionCheck",
    "verify_recursions",
    "zigzag_decompositions",
]


# ---------------------------------------------------------------------------
# Andre numbers

def _andre_list(limit: int) -> list[int]:
    # boustrophedon transform of 1, 0, 0, ...
    values = [1]
    row = [1]
    for _ in range(limit):
        new = [0]
        for x in reversed(row):
            new.append(new[-1] + x)
        row = new
        values.append(row[-1])
    return values


@dataclass(frozen=True)
class SequenceTable:
    """Andre numbers A_0..A_limit with their scaled companions.

    A_{2n} is the unsigned secant number, A_{2n-1} the tangent number T_n.
    The signed Euler numbers are E_{2n} = (-1)^n A_{2n}.  The companions
    divide out factorials and Mersenne-type factors:

        bar(n)   = A_n / n!
        tilde(n) = bar(n) / (2^(n+1) - 1)
        hat(n)   = (2^n - 1) bar(n) / (2^n (2^(n+1) - 1))
    """

    a: tuple[int, ...]

    @property
    def limit(self) -> int:
        return len(self.a) - 1

    def euler(self, n: int) -> int:
        if n % 2:
            return 0
        return (-1) ** (n // 2) * self.a[n]

    def tangent(self, n: int) -> int:
        return self.a[2 * n - 1]

    def bar(self, n: int) -> Fraction:
        return Fraction(self.a[n], factorial(n))

    def tilde(self, n: int) -> Fraction:
        return self.bar(n) / (2 ** (n + 1) - 1)

    def hat(self, n: int) -> Fraction:
        return self.bar(n) * (2**n - 1) / (2**n * (2 ** (n + 1) - 1))


def andre_numbers(limit: int) -> SequenceTable:
    """Sequence table up to A_limit, by the boustrophedon recurrence."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    return SequenceTable(tuple(_andre_list(limit)))


@lru_cache(maxsize=None)
def _andre(n: int) -> int:
    return _andre_list(n)[n]


def _tangent(n: int) -> int:
    return _andre(2 * n - 1)


def _euler(n: int) -> int:
    # signed, even index only
    return (-1) ** (n // 2) * _andre(n)


# ---------------------------------------------------------------------------
# Diagram construction

@dataclass(frozen=True)
class MStripSpec:
    """Parameters of an m-strip diagram: thickness, width, head and tail.

    Head parts extend the rightmost columns upward, tail parts the leftmost
    columns downward; both are partitions with at most floor(m/2) parts.
    """

    m: int
    n: int
    head: tuple[int, ...] = ()
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("thickness m must be at least 2")
        if self.n < 1:
            raise ValueError("width n must be at least 1")
        object.__setattr__(self, "head", as_partition(self.head))
        object.__setattr__(self, "tail", as_partition(self.tail))
        k = self.m // 2
        if len(self.head) > k:
            raise ValueError(f"head has more than {k} parts")
        if len(self.tail) > k:
            raise ValueError(f"tail has more than {k} parts")


def body_column_heights(m: int, n: int) -> tuple[int, ...]:
    """Heights of the n body columns after both diagonal cuts."""
    cut = (m - 1) // 2
    heights = []
    for j in range(1, n + 1):
        lose = max(0, cut - (j - 1)) + max(0, cut - (n - j))
        if lose >= m:
            raise ValueError(f"width {n} too small for thickness {m}")
        heights.append(m - lose)
    return tuple(heights)


def build_mstrip(spec: MStripSpec) -> SkewShape:
    """Assemble the skew diagram of an m-strip specification.

    Column j of the body descends one row for each step right; the cuts
    remove a triangular corner of floor((m-1)/2) diagonals at each end.
    Head part i sits on top of column n-i, tail part i hangs below column
    i+1.  Widths below floor(m/2) are rejected: the two cuts would overlap.
    """
    m, n, head, tail = spec.m, spec.n, spec.head, spec.tail
    if n < max(1, m // 2):
        raise ValueError(f"width {n} too small for thickness {m}")
    cut = (m - 1) // 2
    columns: dict[int, set[int]] = {}
    for j in range(1, n + 1):
        top = -(j - 1)
        lose_top = max(0, cut - (n - j))
        lose_bottom = max(0, cut - (j - 1))
        columns[j] = set(range(top + lose_top, top + m - lose_bottom))
    for i, part in enumerate(head):
        col = columns[n - i]
        lo = min(col)
        col.update(range(lo - part, lo))
    for i, part in enumerate(tail):
        col = columns[i + 1]
        hi = max(col)
        col.update(range(hi + 1, hi + 1 + part))
    shift = 1 - min(min(col) for col in columns.values())
    boxes = frozenset((r + shift, j) for j, col in columns.items() for r in col)

    heights = body_column_heights(m, n)
    for j in range(1, n + 1):
        expect = heights[j - 1]
        if j > n - len(head):
            expect += head[n - j]
        if j <= len(tail):
            expect += tail[j - 1]
        assert len(columns[j]) == expect, "column readback mismatch"
    assert len(boxes) == sum(heights) + sum(head) + sum(tail)
    return boxes_to_skew(boxes)


# ---------------------------------------------------------------------------
# Tableau counts

@lru_cache(maxsize=None)
def alpha2(n: int, p: int, q: int) -> int:
    """Standard tableaux of the 2-strip with head (q) and tail (p).

    alpha2(n, 0, 0) is the up-down count A_{2n}; the value is symmetric
    in p and q because the diagram rotates onto itself.
    """
    spec = MStripSpec(2, n, (q,) if q else (), (p,) if p else ())
    return count_syt_aitken(build_mstrip(spec))


@lru_cache(maxsize=None)
def alpha3(n: int, p: int, q: int) -> int:
    """Standard tableaux of the 3-strip with head (q) and tail (p)."""
    spec = MStripSpec(3, n, (q,) if q else (), (p,) if p else ())
    return count_syt_aitken(build_mstrip(spec))


def xy_numbers(n: int, p: int, q: int) -> tuple[Fraction, Fraction]:
    """Determinant entries: the 2- and 3-strip counts over their factorials."""
    x = Fraction(alpha2(n, p, q), factorial(2 * n + p + q))
    y = Fraction(alpha3(n, p, q), factorial(3 * n + p + q - 2))
    return x, y


def count_mstrip_thm(spec: MStripSpec) -> int:
    """Count standard tableaux by the order-floor(m/2) determinant.

    Entries are 2-strip counts for even m and 3-strip counts for odd m,
    taken at width n - floor(m/2) + 1 and indexed by the staircase-shifted
    head and tail parts.  The result is asserted against the quotient
    formula count on the assembled diagram before it is returned.
    """
    shape = build_mstrip(spec)
    k = spec.m // 2
    npr = spec.n - k + 1
    lpad = spec.head + (0,) * (k - len(spec.head))
    mpad = spec.tail + (0,) * (k - len(spec.tail))
    ell = [lpad[i] + k - 1 - i for i in range(k)]
    em = [mpad[j] + k - 1 - j for j in range(k)]
    if spec.m % 2 == 0:
        entry = lambda p, q: Fraction(alpha2(npr, p, q), factorial(2 * npr + p + q))
    else:
        entry = lambda p, q: Fraction(alpha3(npr, p, q), factorial(3 * npr + p + q - 2))
    det = determinant_rational([[entry(ell[i], em[j]) for j in range(k)] for i in range(k)])
    sign = -1 if comb(k, 2) % 2 else 1
    value = sign * factorial(shape.size) * det
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral determinant count {value} for {spec}")
    count = int(value)
    assert count == count_syt_aitken(shape)
    return count


# ---------------------------------------------------------------------------
# Closed forms for thickness 3, 4, 5

@dataclass(frozen=True)
class ClosedForms:
    """Closed-form tableau counts for the width-n strips of thickness 3 to 5.

    The three_strip values are alpha3(n, p, q) for (p, q) in (0,0), (0,1),
    (1,1); the four_ and five_strip values count the plain diagrams and, for
    thickness 4, the diagram with one head and one tail cell; c3n counts the
    3-strip with a tail cell and one extra cell right of its top corner.
    five_strip_plain needs n >= 2 and is None below that.
    """

    n: int
    three_strip_plain: int
    three_strip_head: int
    three_strip_full: int
    four_strip_plain: int
    four_strip_full: int
    five_strip_plain: int | None
    c3n: int


def _exact_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return int(value)


def closed_forms(n: int) -> ClosedForms:
    """Evaluate the seven classical closed forms at width n."""
    if n < 1:
        raise ValueError("width n must be at least 1")
    t = _tangent(n)
    e = _euler
    three_plain = _exact_int(
        Fraction(factorial(3 * n - 2) * t, factorial(2 * n - 1) * 2 ** (2 * n - 2))
    )
    three_head = _exact_int(
        Fraction(factorial(3 * n - 1) * t, factorial(2 * n - 1) * 2 ** (2 * n - 1))
    )
    three_full = _exact_int(
        Fraction(
            factorial(3 * n) * (2 ** (2 * n - 1) - 1) * t,
            factorial(2 * n - 1) * 2 ** (2 * n - 1) * (2 ** (2 * n) - 1),
        )
    )
    four_plain = comb(4 * n - 2, 2 * n - 1) * t * t + comb(4 * n - 2, 2 * n - 2) * e(
        2 * n - 2
    ) * e(2 * n)
    four_full = comb(4 * n, 2 * n) * e(2 * n) ** 2 - comb(4 * n, 2 * n - 2) * e(
        2 * n - 2
    ) * e(2 * n + 2)
    if n >= 2:
        five_plain = _exact_int(
            Fraction(
                factorial(5 * n - 6) * _tangent(n - 1) ** 2,
                factorial(2 * n - 3) ** 2 * 2 ** (4 * n - 6) * (2 ** (2 * n - 2) - 1),
            )
        )
    else:
        five_plain = None
    c3n = _exact_int(
        Fraction(
            factorial(3 * n) * _andre(2 * n - 1),
            factorial(2 * n - 1) * (2 ** (2 * n) - 1),
        )
    )
    return ClosedForms(
        n=n,
        three_strip_plain=three_plain,
        three_strip_head=three_head,
        three_strip_full=three_full,
        four_strip_plain=four_plain,
        four_strip_full=four_full,
        five_strip_plain=five_plain,
        c3n=c3n,
    )


# ---------------------------------------------------------------------------
# The 3-strip family and its recursions

def d3_variants(n: int) -> dict[str, SkewShape]:
    """The four 3-strip diagrams of width n: plain, head, tail, both."""
    return {
        "plain": build_mstrip(MStripSpec(3, n)),
        "head": build_mstrip(MStripSpec(3, n, head=(1,))),
        "tail": build_mstrip(MStripSpec(3, n, tail=(1,))),
        "both": build_mstrip(MStripSpec(3, n, head=(1,), tail=(1,))),
    }


def c3n_diagram(n: int) -> SkewShape:
    """3-strip with a tail cell, plus one cell right of the top corner."""
    base = build_mstrip(MStripSpec(3, n, tail=(1,)))
    boxes = set(base.boxes)
    top = min(boxes, key=lambda b: (b[0], -b[1]))
    boxes.add((top[0], top[1] + 1))
    return boxes_to_skew(frozenset(boxes))


def _remove_box(shape: SkewShape, box: tuple[int, int]) -> SkewShape:
    boxes = set(shape.boxes)
    boxes.remove(box)
    return boxes_to_skew(frozenset(boxes))


def _check_removal_index(n: int, i: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"removal index {i} outside 1..{n - 1}")


def d3_plain_minus(n: int, i: int) -> SkewShape:
    """Plain 3-strip of width n with the top cell of column n-i removed."""
    _check_removal_index(n, i)
    return _remove_box(build_mstrip(MStripSpec(3, n)), (i, n - i))


def c3n_minus(n: int, i: int) -> SkewShape:
    """c3n diagram of width n with the top cell of column n-i removed."""
    _check_removal_index(n, i)
    return _remove_box(c3n_diagram(n), (i, n - i))


@dataclass(frozen=True)
class RecursionCheck:
    name: str
    n: int
    i: int | None
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def verify_recursions(n_max: int = 6) -> list[RecursionCheck]:
    """Check the six 3-strip counting recursions for widths up to n_max.

    All counts come from the quotient formula, never from the closed forms,
    so the checks are independent of the determinant machinery.  The two
    convolution identities start at width 2; their sums are empty at n = 1.
    """
    f = count_syt_aitken
    checks = []

    def add(name, n, i, lhs, rhs):
        checks.append(RecursionCheck(name, n, i, lhs, rhs))

    for n in range(1, n_max + 1):
        d = d3_variants(n)
        plain, head, both = f(d["plain"]), f(d["head"]), f(d["both"])
        c = f(c3n_diagram(n))
        add("halving", n, None, (3 * n - 1) * plain, 2 * head)
        add("augment-split", n, None, 3 * n * head, both + c)
        for i in range(1, n):
            di = d3_variants(i)
            dni = d3_variants(n - i)
            add(
                "corner-removal-plain",
                n,
                i,
                (3 * n - 2) * f(d3_plain_minus(n, i)),
                plain + comb(3 * n - 2, 3 * i - 1) * f(di["head"]) * f(dni["head"]),
            )
            add(
                "corner-removal-augmented",
                n,
                i,
                3 * n * f(c3n_minus(n, i)),
                c + comb(3 * n, 3 * i) * f(c3n_diagram(i)) * f(c3n_diagram(n - i)),
            )
        if n >= 2:
            add(
                "convolution-plain",
                n,
                None,
                (2 * n - 1) * plain,
                sum(
                    comb(3 * n - 2, 3 * i - 1)
                    * f(d3_variants(i)["head"])
                    * f(d3_variants(n - i)["head"])
                    for i in range(1, n)
                ),
            )
            add(
                "convolution-augmented",
                n,
                None,
                (2 * n + 1) * c,
                sum(
                    comb(3 * n, 3 * i) * f(c3n_diagram(i)) * f(c3n_diagram(n - i))
                    for i in range(1, n)
                ),
            )
    return checks


# ---------------------------------------------------------------------------
# Zigzag strip covers of the 4- and 5-strips

def zigzag_decompositions(spec: MStripSpec) -> Decomposition:
    """Two-strip outside nested cover of a 4- or 5-strip diagram.

    For thickness 4 the diagram splits into two disjoint zigzags peeled off
    the bottom rim; for thickness 5 into two staircase bands overlapping in
    one cell per column.  Supported: (m=4, plain), (m=4, head and tail one
    cell each), (m=5, plain).  The cover is validated before it is returned.
    """
    shape = build_mstrip(spec)
    n = spec.n
    if spec.m == 4 and not spec.head and not spec.tail:
        outer = {(n + 1, 1)}
        inner = {(1, n)}
        for j in range(2, n + 1):
            outer.update({(n + 3 - j, j), (n + 2 - j, j)})
        for j in range(1, n):
            inner.update({(n - j, j), (n + 1 - j, j)})
    elif spec.m == 4 and spec.head == (1,) and spec.tail == (1,):
        outer = {(n + 3, 1)}
        inner = set()
        for j in range(1, n + 1):
            if j > 1:
                outer.add((n + 4 - j, j))
            outer.add((n + 3 - j, j))
            inner.update({(n - j + 1, j), (n - j + 2, j)})
    elif spec.m == 5 and not spec.head and not spec.tail:
        if n < 2:
            raise ValueError("5-strip zigzag cover needs width at least 2")
        cols: dict[int, list[int]] = {}
        for r, c in shape.boxes:
            cols.setdefault(c, []).append(r)
        outer, inner = set(), set()
        for j in range(1, n + 1):
            rows = sorted(cols[j])
            anchor = n + 1 - j  # one shared cell per column, on the antidiagonal
            assert rows[0] <= anchor <= rows[-1]
            outer.update((r, j) for r in rows if r >= anchor)
            inner.update((r, j) for r in rows if r <= anchor)
    else:
        raise ValueError(f"no zigzag cover implemented for {spec}")
    d = Decomposition(shape, (frozenset(outer), frozenset(inner)))
    report = validate_decomposition(d)
    assert report.ok, report.message
    return d
