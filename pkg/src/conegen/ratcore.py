"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`, which is always kept in reduced
form with a positive denominator. Vectors are tuples of fractions and
matrices are tuples of row tuples; everything here is immutable and pure.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


class DimensionError(ValueError):
    """Operands of incompatible dimensions."""


class SingularBasisError(ValueError):
    """Raised when a supposed basis turns out to be linearly dependent."""


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``-p`` or ``p/q`` (``q > 0``) into a Fraction.

    Decimal and exponent forms are rejected on purpose; input must be exact.
    """
    token = text.strip()
    if not _RATIONAL_RE.fullmatch(token):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_rational(x: Fraction) -> str:
    return str(x)


def vector(entries: Iterable) -> Vector:
    """Build a vector, converting ints and rational strings to Fraction."""
    out = []
    for e in entries:
        if isinstance(e, str):
            out.append(parse_rational(e))
        elif isinstance(e, float):
            raise TypeError("floats are not accepted; use Fraction or a string")
        else:
            out.append(Fraction(e))
    return tuple(out)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    rows = tuple(vector(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("ragged matrix rows")
    return rows


def zeros(n: int) -> Vector:
    return (Fraction(0),) * n


def _check(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def dot(a: Vector, b: Vector) -> Fraction:
    _check(a, b)
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Vector, b: Vector) -> Vector:
    _check(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    _check(a, b)
    return tuple(x - y for x, y in zip(a, b))


def scale(t, v: Vector) -> Vector:
    t = Fraction(t)
    return tuple(t * x for x in v)


def neg(v: Vector) -> Vector:
    return tuple(-x for x in v)


def is_zero(v: Vector) -> bool:
    return all(x == 0 for x in v)


def vsum(vectors: Iterable[Vector], n: int) -> Vector:
    total = zeros(n)
    for v in vectors:
        total = add(total, v)
    return total


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    """Transpose; ``ncols`` gives the column count when ``m`` has no rows."""
    if not m:
        return ((),) * (ncols or 0)
    return tuple(zip(*m))


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and ascending pivot columns of ``m``."""
    rows = [list(vector(r)) for r in m]
    if not rows:
        return (), []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise DimensionError("ragged matrix rows")
    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            f = rows[i][col]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    return tuple(tuple(row) for row in rows), pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def extract_basis(vectors: Sequence[Vector]) -> list[int]:
    """Indices of the greedy (lexicographically first) maximal independent subset.

    Each vector is reduced against the echelon rows accepted so far and kept
    iff a nonzero remainder is left.
    """
    echelon: list[tuple[int, list[Fraction]]] = []  # (pivot column, row)
    chosen = []
    for idx, v in enumerate(vectors):
        w = list(v)
        for col, row in echelon:
            f = w[col]
            if f != 0:
                w = [x - f * y for x, y in zip(w, row)]
        lead = next((j for j, x in enumerate(w) if x != 0), None)
        if lead is None:
            continue
        inv = 1 / w[lead]
        echelon.append((lead, [x * inv for x in w]))
        chosen.append(idx)
    return chosen


def solve(m: Matrix, b: Vector) -> Vector:
    """Solve the square nonsingular system ``m x = b`` exactly."""
    k = len(m)
    _check(m, b)
    red, pivots = rref([list(row) + [rhs] for row, rhs in zip(m, b)])
    if pivots != list(range(k)):
        raise SingularBasisError("singular system")
    return tuple(row[-1] for row in red)


def project_complement(x: Vector, basis: Sequence[Vector]) -> Vector:
    """Orthogonal projection of ``x`` onto the complement of ``span(basis)``.

    Uses the normal equations ``x - M (M^T M)^{-1} M^T x`` with the basis as
    the columns of ``M``; no square roots, so the result stays rational.
    ``basis`` must be linearly independent, otherwise SingularBasisError.
    """
    if not basis:
        return tuple(x)
    for b in basis:
        _check(x, b)
    gram = tuple(tuple(dot(a, b) for b in basis) for a in basis)
    rhs = tuple(dot(b, x) for b in basis)
    coeffs = solve(gram, rhs)
    out = tuple(x)
    for t, b in zip(coeffs, basis):
        if t != 0:
            out = sub(out, scale(t, b))
    return out
