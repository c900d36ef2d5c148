"""Determinant identities attached to an outside nested decomposition.

For a decomposition with g thickened strips and r shared boxes, the g x g
matrix of # compositions satisfies

    p1^r * s_shape = det[ s_(i#j) ]

as symmetric polynomials, with the conventions s of the empty segment = 1
and s of an undefined segment = 0.  Dividing by monomial weights turns the
same determinant into an exact count of standard Young tableaux, where the
shared boxes drop out entirely.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .decomp import UNDEFINED, Decomposition, sharp, thickened_cutting_strip
from .polynomial import (
    MPoly,
    determinant,
    determinant_rational,
    power_sum_p1r,
)
from .shapes import boxes_to_skew
from .tableaux import count_syt_aitken, count_syt_bruteforce, schur_jacobi_trudi

ORACLE_ENV = "SKEWDET_MAX_ORACLE_BOXES"


def _oracle_limit() -> int:
    return int(os.environ.get(ORACLE_ENV, "12"))


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of the identity with their comparison.

    A run with fewer variables than the polynomial degree can only be a
    consistency check; conclusive is True when nvars reaches the degree,
    at which point equality of the polynomials decides the identity.
    """

    lhs: MPoly
    rhs: MPoly
    equal: bool
    r: int
    g: int
    nvars: int
    conclusive: bool


def _sharp_matrix(d: Decomposition):
    H = thickened_cutting_strip(d)
    return [[sharp(d, i, j, H) for j in range(d.g)] for i in range(d.g)]


def theorem_lhs(d: Decomposition, nvars: int) -> MPoly:
    """p1^r times the Schur polynomial of the decomposed shape."""
    return power_sum_p1r(nvars, d.r) * schur_jacobi_trudi(d.shape, nvars)


def theorem_rhs(d: Decomposition, nvars: int) -> MPoly:
    """Determinant of the Schur polynomials of the # compositions.

    The value does not depend on the order of the strips: permuting them
    permutes rows and columns by the same permutation.
    """
    rows = []
    for row_segs in _sharp_matrix(d):
        row = []
        for seg in row_segs:
            if seg is UNDEFINED:
                row.append(MPoly.zero(nvars))
            elif not seg:
                row.append(MPoly.const(nvars, 1))
            else:
                row.append(schur_jacobi_trudi(boxes_to_skew(frozenset(seg)), nvars))
        rows.append(row)
    return determinant(rows)


def corollary_count(d: Decomposition) -> int:
    """Standard tableau count of the shape from the # determinant.

    Entry (i, j) is f^(i#j) over the factorial of the segment size, with 1
    for empty and 0 for undefined segments.  The r shared boxes vanish from
    the statement.  At oracle scale the value is asserted against the
    profile-walk count before it is returned.
    """
    rows = []
    for row_segs in _sharp_matrix(d):
        row = []
        for seg in row_segs:
            if seg is UNDEFINED:
                row.append(Fraction(0))
            elif not seg:
                row.append(Fraction(1))
            else:
                shape = boxes_to_skew(frozenset(seg))
                row.append(Fraction(count_syt_aitken(shape), factorial(shape.size)))
        rows.append(row)
    value = factorial(d.shape.size) * determinant_rational(rows)
    if value.denominator != 1:
        raise ArithmeticError(f"tableau count determinant is not integral: {value}")
    count = int(value)
    if d.shape.size <= _oracle_limit():
        assert count == count_syt_bruteforce(d.shape)
    return count


def verify_identity(d: Decomposition, nvars: int) -> IdentityReport:
    """Evaluate both sides of the polynomial identity and compare exactly.

    Works on any decomposition the # machinery can address, including
    deliberately broken ones: a corrupted cover simply comes back with
    equal False rather than raising.
    """
    lhs = theorem_lhs(d, nvars)
    rhs = theorem_rhs(d, nvars)
    degree = d.shape.size + d.r
    return IdentityReport(
        lhs=lhs,
        rhs=rhs,
        equal=lhs == rhs,
        r=d.r,
        g=d.g,
        nvars=nvars,
        conclusive=nvars >= degree,
    )
