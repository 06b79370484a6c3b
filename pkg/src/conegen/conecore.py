"""Cone operations on finite generator sets.

Everything is decided by exact LP membership tests, so answers are exact.
Generator sets are ordered; the order fixes which of several equivalent
generators the reductions keep.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .lpfeas import Feasible, FeasibilityResult, FeasibilitySystem, solve_feasibility
from .ratcore import (
    DimensionError,
    Vector,
    extract_basis,
    is_zero,
    neg,
    project_complement,
    vector,
    vsum,
)


@dataclass(frozen=True)
class GeneratorSet:
    """An ordered list of vectors in ``Q^n``; duplicates and zeros allowed."""

    ambient_dim: int
    vectors: tuple[Vector, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        vecs = tuple(vector(v) for v in self.vectors)
        for v in vecs:
            if len(v) != self.ambient_dim:
                raise DimensionError(
                    f"vector of dimension {len(v)} in a set of ambient dimension {self.ambient_dim}"
                )
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def of(cls, rows: Sequence[Iterable], ambient_dim: int | None = None) -> "GeneratorSet":
        """Shorthand: ``GeneratorSet.of([(1, 0), (0, 1)])``."""
        rows = [vector(r) for r in rows]
        if ambient_dim is None:
            if not rows:
                raise ValueError("ambient_dim is required for an empty set")
            ambient_dim = len(rows[0])
        return cls(ambient_dim, tuple(rows))

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.vectors)

    def __getitem__(self, i: int) -> Vector:
        return self.vectors[i]

    def subset(self, indices: Iterable[int]) -> "GeneratorSet":
        return GeneratorSet(self.ambient_dim, tuple(self.vectors[i] for i in indices))

    def without(self, index: int) -> "GeneratorSet":
        return self.subset(i for i in range(len(self)) if i != index)


@dataclass(frozen=True)
class MembershipCertificate:
    """Nonnegative coefficients with ``sum(coefficients[i] * S[i]) == c``."""

    coefficients: tuple[Fraction, ...]

    def as_map(self) -> dict[int, Fraction]:
        return {i: lam for i, lam in enumerate(self.coefficients) if lam != 0}


@dataclass(frozen=True)
class ConeDecomposition:
    lineal_part: tuple[int, ...]
    conic_part: tuple[int, ...]
    lineality_basis: tuple[int, ...]
    projected_conic: tuple[Vector, ...]

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality_basis)


def _check_dim(c: Vector, S: GeneratorSet) -> None:
    if len(c) != S.ambient_dim:
        raise DimensionError(f"point of dimension {len(c)} vs cone in dimension {S.ambient_dim}")


def certify_membership(c: Sequence, S: GeneratorSet) -> FeasibilityResult:
    """Solve ``S y = c, y >= 0``; returns the certificate for either answer."""
    c = vector(c)
    _check_dim(c, S)
    return solve_feasibility(FeasibilitySystem.from_columns(S.vectors, c))


def member(c: Sequence, S: GeneratorSet) -> MembershipCertificate | None:
    res = certify_membership(c, S)
    if isinstance(res, Feasible):
        return MembershipCertificate(res.y)
    return None


def _in_cone(c: Vector, S: GeneratorSet) -> bool:
    return member(c, S) is not None


def reduce_ci_indices(S: GeneratorSet) -> list[int]:
    """Indices kept by the sequential frame reduction, in ascending order.

    Generator ``i`` is dropped when it lies in the cone of the generators still
    kept, excluding itself; later indices are still present at that point.
    """
    kept = list(range(len(S)))
    for i in range(len(S)):
        others = S.subset(j for j in kept if j != i)
        if _in_cone(S[i], others):
            kept.remove(i)
    return kept


def reduce_ci(S: GeneratorSet) -> GeneratorSet:
    return S.subset(reduce_ci_indices(S))


def _negation_in_cone(args: tuple[Vector, GeneratorSet]) -> bool:
    v, S = args
    return _in_cone(neg(v), S)


def lineal_part(S: GeneratorSet, jobs: int = 1) -> list[int]:
    """Indices ``i`` with ``-S[i]`` in ``cone(S)``.

    The tests are independent of each other, so ``jobs > 1`` farms them out to
    worker processes; the result does not depend on ``jobs``.
    """
    work = [(v, S) for v in S]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(_negation_in_cone, work))
    else:
        flags = [_negation_in_cone(w) for w in work]
    return [i for i, flag in enumerate(flags) if flag]


def is_pointed(S: GeneratorSet, jobs: int = 1) -> bool:
    return all(is_zero(S[i]) for i in lineal_part(S, jobs=jobs))


def decompose(S: GeneratorSet, jobs: int = 1) -> ConeDecomposition:
    lin = lineal_part(S, jobs=jobs)
    lin_set = set(lin)
    conic = [i for i in range(len(S)) if i not in lin_set]
    basis = [lin[k] for k in extract_basis([S[i] for i in lin])]
    basis_vectors = [S[i] for i in basis]
    projected = tuple(project_complement(S[i], basis_vectors) for i in conic)
    return ConeDecomposition(tuple(lin), tuple(conic), tuple(basis), projected)


def minimize_with_decomposition(S: GeneratorSet, jobs: int = 1) -> tuple[GeneratorSet, ConeDecomposition]:
    """Like :func:`minimize`, also returning the decomposition of the frame."""
    frame = reduce_ci(S)
    dec = decompose(frame, jobs=jobs)
    basis = [frame[i] for i in dec.lineality_basis]
    out = list(basis)
    if basis:
        out.append(neg(vsum(basis, S.ambient_dim)))
    out.extend(frame[i] for i in dec.conic_part)
    return GeneratorSet(S.ambient_dim, tuple(out)), dec


def minimize(S: GeneratorSet, jobs: int = 1) -> GeneratorSet:
    """A minimum-cardinality generator of ``cone(S)``.

    Frame-reduce, then replace the lineal part by a basis ``B`` of the
    lineality space plus the single vector ``-sum(B)``; the conic part of the
    frame is kept as is. With a trivial lineality space nothing is added.
    The result is generally not a subset of ``S``.
    """
    return minimize_with_decomposition(S, jobs)[0]


def contains_all(A: GeneratorSet, B: GeneratorSet) -> bool:
    """True iff every generator of ``B`` lies in ``cone(A)``."""
    if A.ambient_dim != B.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}")
    return all(_in_cone(v, A) for v in B)


def cone_equal(A: GeneratorSet, B: GeneratorSet) -> bool:
    return contains_all(B, A) and contains_all(A, B)


def redundant_indices(S: GeneratorSet) -> list[int]:
    """Indices ``i`` with ``S[i]`` in the cone of the other generators."""
    return [i for i in range(len(S)) if _in_cone(S[i], S.without(i))]
