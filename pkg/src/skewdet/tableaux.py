"""Tableaux on skew box sets: enumeration, counting, and Schur polynomials.

A filling is a dict box -> positive int entry.  Semistandardness is the
usual local condition among boxes that are actually present, so arbitrary
translated skew box sets (strip segments, cutting strips) work directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .polynomial import MPoly, determinant, determinant_rational
from .shapes import SkewShape, boxes_to_skew


def _as_boxes(shape_or_boxes) -> frozenset:
    if isinstance(shape_or_boxes, SkewShape):
        return shape_or_boxes.boxes
    return frozenset(shape_or_boxes)


def is_ssyt(boxes, filling) -> bool:
    """Rows weakly increase rightward, columns strictly increase downward."""
    boxes = _as_boxes(boxes)
    if set(filling) != set(boxes):
        return False
    for (s, t), q in filling.items():
        if q < 1:
            return False
        right = filling.get((s, t + 1))
        if right is not None and right < q:
            return False
        below = filling.get((s + 1, t))
        if below is not None and below <= q:
            return False
    return True


def enumerate_ssyt(shape_or_boxes, max_entry: int):
    """All semistandard fillings with entries in 1..max_entry.

    Boxes are filled row-major; each box's entry starts at the larger of its
    left neighbor and one more than its upper neighbor.
    """
    boxes = _as_boxes(shape_or_boxes)
    order = sorted(boxes)
    filling: dict = {}

    def fill(k):
        if k == len(order):
            yield dict(filling)
            return
        s, t = order[k]
        lo = 1
        left = filling.get((s, t - 1))
        if left is not None:
            lo = max(lo, left)
        up = filling.get((s - 1, t))
        if up is not None:
            lo = max(lo, up + 1)
        for q in range(lo, max_entry + 1):
            filling[(s, t)] = q
            yield from fill(k + 1)
        filling.pop((s, t), None)

    yield from fill(0)


def tableau_monomial(filling, nvars: int) -> MPoly:
    exps = [0] * nvars
    for q in filling.values():
        if not 1 <= q <= nvars:
            raise ValueError(f"entry {q} outside 1..{nvars}")
        exps[q - 1] += 1
    return MPoly(nvars, {tuple(exps): 1})


def schur_direct(shape_or_boxes, nvars: int) -> MPoly:
    """The Schur polynomial as the generating function of its tableaux."""
    total = MPoly.zero(nvars)
    for filling in enumerate_ssyt(shape_or_boxes, nvars):
        total = total + tableau_monomial(filling, nvars)
    return total


def count_syt_bruteforce(shape_or_boxes) -> int:
    """Standard fillings counted by a lattice walk over row profiles.

    State: how many boxes of each row are placed; the next value may extend
    row i when the box above the new cell (if any) is already placed.
    """
    boxes = _as_boxes(shape_or_boxes)
    if not boxes:
        return 1
    shape = boxes_to_skew(boxes)
    lam, mu = shape.lam, shape.mu
    k = len(lam)
    rows = [lam[i] - mu[i] for i in range(k)]

    @lru_cache(maxsize=None)
    def walk(profile):
        if all(profile[i] == rows[i] for i in range(k)):
            return 1
        total = 0
        for i in range(k):
            if profile[i] >= rows[i]:
                continue
            col = mu[i] + profile[i] + 1
            if i > 0 and mu[i - 1] < col <= lam[i - 1]:
                if profile[i - 1] < col - mu[i - 1]:
                    continue
            total += walk(profile[:i] + (profile[i] + 1,) + profile[i + 1 :])
        return total

    result = walk((0,) * k)
    walk.cache_clear()
    return result


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, nvars: int) -> MPoly:
    """h_k in nvars variables."""
    if k < 0:
        return MPoly.zero(nvars)
    if k == 0:
        return MPoly.const(nvars, 1)
    if nvars == 0:
        return MPoly.zero(0)
    # peel off the last variable
    total = MPoly.zero(nvars)
    lower = [complete_homogeneous(j, nvars - 1) for j in range(k + 1)]
    for j in range(k + 1):
        lifted = MPoly(
            nvars, {e + (j,): c for e, c in lower[k - j].terms.items()}
        )
        total = total + lifted
    return total


def schur_jacobi_trudi(shape: SkewShape, nvars: int) -> MPoly:
    """Schur polynomial as a determinant of complete homogeneous pieces."""
    lam, mu = shape.lam, shape.mu
    k = len(lam)
    if k == 0:
        return MPoly.const(nvars, 1)
    rows = [
        [complete_homogeneous(lam[i] - mu[j] - i + j, nvars) for j in range(k)]
        for i in range(k)
    ]
    return determinant(rows)


def count_syt_aitken(shape: SkewShape) -> int:
    """Standard filling count as n! times a determinant of inverse
    factorials; entries with negative argument vanish."""
    lam, mu = shape.lam, shape.mu
    k = len(lam)
    n = shape.size
    if k == 0:
        return 1
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            a = lam[i] - mu[j] - i + j
            row.append(Fraction(1, factorial(a)) if a >= 0 else Fraction(0))
        rows.append(row)
    value = factorial(n) * determinant_rational(rows)
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"filling count came out as {value}")
    return int(value)
