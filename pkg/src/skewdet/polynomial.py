"""Exact multivariate polynomial arithmetic over the integers.

Small and purpose-built: dense symbolic systems are overkill for the
determinant sweeps this package runs, where thousands of tiny exact
determinants dominate.  Terms are kept in a dict keyed by exponent tuples;
coefficients are python ints, so nothing ever overflows or rounds.
"""

from __future__ import annotations

from fractions import Fraction


class MPoly:
    """Polynomial in a fixed number of variables with int coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coef in dict(terms).items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(f"exponent tuple {exps} for {nvars} vars")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if coef:
                    clean[exps] = clean.get(exps, 0) + int(coef)
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def const(cls, nvars: int, c: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        """The variable x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exps = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls(nvars, {exps: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, MPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            out[exps] = out.get(exps, 0) + coef
        return MPoly(self.nvars, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "MPoly":
        other = self._coerce(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly(self.nvars, out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, int):
            return MPoly.const(self.nvars, other)
        if not isinstance(other, MPoly):
            raise TypeError(f"cannot combine MPoly with {type(other)}")
        if other.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
        return other

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def evaluate(self, values):
        values = list(values)
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = 0
        for exps, coef in self.terms.items():
            term = coef
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    def sorted_terms(self):
        """Terms in graded lexicographic order, largest first."""
        return sorted(
            self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            if not mono:
                parts.append(f"{coef:+d}")
            elif coef == 1:
                parts.append(f"+{mono}")
            elif coef == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coef:+d}*{mono}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    __repr__ = __str__


def power_sum_p1r(nvars: int, r: int) -> MPoly:
    """(x_1 + ... + x_nvars)^r; the r = 0 case is the constant 1."""
    s = MPoly(nvars, {tuple(1 if k == i else 0 for k in range(nvars)): 1 for i in range(nvars)})
    return s**r


def _leading(p: MPoly):
    exps = max(p.terms, key=lambda e: (sum(e), e))
    return exps, p.terms[exps]


def divexact(num: MPoly, den: MPoly) -> MPoly:
    """Exact division, raising if den does not divide num.

    Repeated leading-term elimination in graded-lex order; enough for the
    fraction-free determinant, where divisibility is guaranteed.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    quot: dict[tuple[int, ...], int] = {}
    rem = num
    de, dc = _leading(den)
    while not rem.is_zero():
        re, rc = _leading(rem)
        qe = tuple(a - b for a, b in zip(re, de))
        if any(e < 0 for e in qe) or rc % dc:
            raise ArithmeticError("inexact polynomial division")
        qc = rc // dc
        quot[qe] = quot.get(qe, 0) + qc
        rem = rem - den * MPoly(num.nvars, {qe: qc})
    return MPoly(num.nvars, quot)


def _det_cofactor(rows):
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return rows[0][0]
    first = rows[0]
    total = None
    for j in range(n):
        if hasattr(first[j], "is_zero") and first[j].is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = first[j] * _det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        zero = first[0] - first[0]
        return zero
    return total


def _det_bareiss(rows):
    """Fraction-free elimination; every division along the way is exact."""
    n = len(rows)
    m = [list(r) for r in rows]
    nvars = m[0][0].nvars
    sign = 1
    prev = MPoly.const(nvars, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for swap in range(k + 1, n):
                if not m[swap][k].is_zero():
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return MPoly.zero(nvars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = divexact(num, prev)
            m[i][k] = MPoly.zero(nvars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def determinant(rows) -> MPoly:
    """Exact determinant of a square MPoly matrix.

    Cofactor expansion is fastest for the small orders that dominate here;
    Bareiss keeps the large ones polynomial-time without fractions.
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix not square")
    if n <= 6:
        return _det_cofactor(rows)
    return _det_bareiss(rows)


def determinant_rational(rows) -> Fraction:
    """Exact determinant of a matrix of Fractions (or ints)."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix not square")
    sign = 1
    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if m[i][k]:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] * inv
            if factor:
                for j in range(k, n):
                    m[i][j] -= factor * m[k][j]
    return sign * det


def poly_to_json(p: MPoly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [
            {"exps": list(e), "coef": str(c)} for e, c in p.sorted_terms()
        ],
    }


def poly_from_json(data: dict) -> MPoly:
    nvars = int(data["nvars"])
    return MPoly(
        nvars, {tuple(t["exps"]): int(t["coef"]) for t in data["terms"]}
    )
