"""Exact feasibility of ``{A y = c, y >= 0}`` with certificates both ways.

The decision is made by a phase-1 simplex over Fractions with Bland's
lowest-index rule. A feasible answer carries ``y``; an infeasible one carries
a Farkas vector ``z`` with ``A^T z <= 0`` and ``c^T z > 0``, read off the
final phase-1 duals. Every certificate is checked before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .ratcore import DimensionError, Matrix, Vector, matrix, vector

_ZERO = Fraction(0)


@dataclass(frozen=True)
class FeasibilitySystem:
    """``A`` is n x m (columns are the generators), ``c`` has length n."""

    A: Matrix
    c: Vector
    m: int

    def __init__(self, A: Sequence[Sequence], c: Sequence, m: int | None = None):
        A = matrix(A)
        c = vector(c)
        if len(A) != len(c):
            raise DimensionError(f"A has {len(A)} rows but c has dimension {len(c)}")
        if m is None:
            m = len(A[0]) if A else 0
        if any(len(row) != m for row in A):
            raise DimensionError("every row of A must have m entries")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "m", m)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], c: Sequence) -> "FeasibilitySystem":
        columns = [vector(col) for col in columns]
        c = vector(c)
        for col in columns:
            if len(col) != len(c):
                raise DimensionError(f"column of length {len(col)} vs c of length {len(c)}")
        rows = tuple(tuple(col[i] for col in columns) for i in range(len(c)))
        return cls(rows, c, m=len(columns))

    @property
    def n(self) -> int:
        return len(self.c)


@dataclass(frozen=True)
class Feasible:
    y: Vector


@dataclass(frozen=True)
class Infeasible:
    z: Vector


FeasibilityResult = Union[Feasible, Infeasible]


class CertificateError(RuntimeError):
    """The solver produced a certificate that does not verify (internal bug)."""


def verify_certificate(system: FeasibilitySystem, res: FeasibilityResult) -> bool:
    """Check a certificate by exact substitution; never trusts the solver."""
    if isinstance(res, Feasible):
        if len(res.y) != system.m:
            raise DimensionError(f"y has {len(res.y)} entries, expected {system.m}")
        if any(v < 0 for v in res.y):
            return False
        return all(
            sum((a * v for a, v in zip(row, res.y)), _ZERO) == ci
            for row, ci in zip(system.A, system.c)
        )
    if isinstance(res, Infeasible):
        if len(res.z) != system.n:
            raise DimensionError(f"z has {len(res.z)} entries, expected {system.n}")
        for j in range(system.m):
            if sum((system.A[i][j] * res.z[i] for i in range(system.n)), _ZERO) > 0:
                return False
        return sum((ci * zi for ci, zi in zip(system.c, res.z)), _ZERO) > 0
    raise TypeError(f"not a feasibility result: {res!r}")


def solve_feasibility(system: FeasibilitySystem) -> FeasibilityResult:
    n, m = system.n, system.m
    # rows with negative right-hand side are flipped so the artificial basis starts feasible
    signs = [-1 if ci < 0 else 1 for ci in system.c]
    width = m + n
    tab = []
    for i in range(n):
        row = [signs[i] * a for a in system.A[i]]
        row += [Fraction(1) if k == i else _ZERO for k in range(n)]
        row.append(signs[i] * system.c[i])
        tab.append(row)
    basis = [m + i for i in range(n)]
    # phase-1 reduced costs: cost 1 on artificials, 0 on y
    cost = [-sum((tab[i][j] for i in range(n)), _ZERO) for j in range(m)] + [_ZERO] * n

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(n):
            a = tab[i][enter]
            if a > 0:
                key = (tab[i][-1] / a, basis[i])
                if best is None or key < best:
                    best, leave = key, i
        if leave is None:
            # phase-1 objective is bounded below by 0, so this cannot happen
            raise CertificateError("phase-1 objective unbounded")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    objective = sum((tab[i][-1] for i in range(n) if basis[i] >= m), _ZERO)
    if objective == 0:
        y = [_ZERO] * m
        for i, j in enumerate(basis):
            if j < m:
                y[j] = tab[i][-1]
        res: FeasibilityResult = Feasible(tuple(y))
    else:
        # artificial i has reduced cost 1 - dual_i
        res = Infeasible(tuple(signs[i] * (1 - cost[m + i]) for i in range(n)))
    if not verify_certificate(system, res):
        raise CertificateError(f"certificate failed verification: {res!r}")
    return res


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, col: int) -> None:
    prow = tab[r]
    inv = 1 / prow[col]
    if inv != 1:
        prow = [x * inv for x in prow]
        tab[r] = prow
    nz = [k for k, x in enumerate(prow) if x != 0]
    for i, row in enumerate(tab):
        f = row[col]
        if i != r and f != 0:
            for k in nz:
                row[k] -= f * prow[k]
    f = cost[col]
    for k in nz:
        if k < len(cost):
            cost[k] -= f * prow[k]
