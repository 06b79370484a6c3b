"""Ground truth for small instances: exhaustive search, known families, and
seeded random instances.

Random instances use NumPy's PCG64 bit generator, so a seed reproduces the
same generator set on every platform.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import conecore
from .conecore import GeneratorSet
from .ratcore import Vector, extract_basis


def _in_cone(c: Vector, S: GeneratorSet) -> bool:
    return conecore.member(c, S) is not None


def bruteforce_min_subset(S: GeneratorSet, cap: int = 12) -> tuple[int, ...]:
    """Smallest index subset ``T`` with ``cone(S[T]) == cone(S)``.

    Subsets are tried by increasing size, lexicographically within a size, so
    the first hit is also the lexicographically least among the smallest.
    """
    if len(S) > cap:
        raise ValueError(f"refusing exhaustive search over {len(S)} > {cap} generators")
    m = len(S)
    for size in range(m + 1):
        for T in itertools.combinations(range(m), size):
            sub = S.subset(T)
            chosen = set(T)
            # cone(S[T]) is always inside cone(S); only the reverse inclusion needs checking
            if all(_in_cone(S[i], sub) for i in range(m) if i not in chosen):
                return T
    raise AssertionError("unreachable: the full set generates its own cone")


def _unit(n: int, i: int, sign: int = 1) -> Vector:
    return tuple(Fraction(sign if j == i else 0) for j in range(n))


def known_family(d: int, k: int) -> tuple[GeneratorSet, int, int]:
    """``{e_1, -e_1, ..., e_d, -e_d, e_{d+1}, ..., e_{d+k}}`` in dimension ``d + k``.

    Returns the set with its minimum generator size and frame size.
    """
    if d < 0 or k < 0 or d + k < 1:
        raise ValueError("need d >= 0, k >= 0 and d + k >= 1")
    n = d + k
    vecs = []
    for i in range(d):
        vecs += [_unit(n, i), _unit(n, i, -1)]
    vecs += [_unit(n, i) for i in range(d, n)]
    expected_min = (d + 1 if d >= 1 else 0) + k
    return GeneratorSet(n, tuple(vecs)), expected_min, 2 * d + k


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    m: int
    d: int = 0
    seed: int = 0
    bound: int = 5
    nonnegative: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 <= self.d <= self.n:
            raise ValueError(f"lineality target d={self.d} must lie in [0, n={self.n}]")
        if self.m < 2 * self.d:
            raise ValueError(f"m={self.m} is too small for {self.d} +/- pairs")
        if self.bound < 1:
            raise ValueError("coefficient bound must be positive")
        if self.nonnegative and self.d:
            raise ValueError("nonnegative instances are pointed; d must be 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _draw_vector(rng: np.random.Generator, n: int, lo: int, hi: int) -> list[int]:
    return [int(x) for x in rng.integers(lo, hi, size=n, endpoint=True)]


def random_instance(spec: InstanceSpec, check: bool = True) -> GeneratorSet:
    """Seeded random generator set with lineality dimension at least ``spec.d``.

    ``d`` independent integer vectors go in together with their negations.
    The remaining slots hold a few pointed seed rays and nonnegative integer
    combinations of them. Seeds are nonnegative integer vectors, sent through
    a random invertible integer matrix unless ``spec.nonnegative``, then
    shifted by random elements of the planted lineality space. The final
    order is shuffled.
    With ``check`` the lineality dimension is confirmed by decomposition.
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    n, b = spec.n, spec.bound

    lineal: list[list[int]] = []
    while len(lineal) < spec.d:
        v = _draw_vector(rng, n, -b, b)
        if len(extract_basis([tuple(map(Fraction, w)) for w in lineal + [v]])) == len(lineal) + 1:
            lineal.append(v)

    vecs: list[list[int]] = []
    for v in lineal:
        vecs += [v, [-x for x in v]]

    remaining = spec.m - len(vecs)
    if remaining:
        # an invertible map keeps cone(seeds) pointed while leaving the orthant
        mixing = None
        if not spec.nonnegative:
            while mixing is None or len(extract_basis([tuple(map(Fraction, r)) for r in mixing])) < n:
                mixing = [_draw_vector(rng, n, -b, b) for _ in range(n)]
        n_seeds = int(rng.integers(min(2, remaining), min(n + 2, remaining), endpoint=True))
        seeds = []
        for _ in range(n_seeds):
            s = _draw_vector(rng, n, 0, b)
            while not any(s):
                s = _draw_vector(rng, n, 0, b)
            if mixing is not None:
                s = [sum(a * x for a, x in zip(row, s)) for row in mixing]
            for v in lineal:
                t = int(rng.integers(-b, b, endpoint=True))
                s = [x + t * y for x, y in zip(s, v)]
            seeds.append(s)
        vecs += seeds[:remaining]
        for _ in range(remaining - len(seeds[:remaining])):
            coeffs = _draw_vector(rng, n_seeds, 0, b)
            combo = [sum(c * s[j] for c, s in zip(coeffs, seeds)) for j in range(n)]
            vecs.append(combo)

    order = rng.permutation(len(vecs))
    S = GeneratorSet(n, tuple(tuple(Fraction(x) for x in vecs[i]) for i in order))
    if check:
        d = conecore.decompose(S).lineality_dim
        if d < spec.d:
            raise AssertionError(f"planted lineality {spec.d} but decomposition found {d}")
    return S


@dataclass
class MinimumReport:
    cone_equal: bool
    size: int
    expected_size: int
    lineality_dim: int
    missing: list[int] = field(default_factory=list)  # S rows outside cone(G)
    extra: list[int] = field(default_factory=list)  # G rows outside cone(S)
    redundant: list[int] = field(default_factory=list)  # G rows inside the cone of the rest
    bruteforce_size: int | None = None

    @property
    def size_ok(self) -> bool:
        return self.size == self.expected_size

    @property
    def bruteforce_ok(self) -> bool:
        return self.bruteforce_size is None or self.bruteforce_size == self.size

    @property
    def passed(self) -> bool:
        return self.cone_equal and self.size_ok and self.bruteforce_ok

    def lines(self, candidate: GeneratorSet | None = None) -> list[str]:
        """Human-readable diff; rows are 1-based."""
        out = []
        mark = "ok" if self.cone_equal else "FAIL"
        out.append(f"{mark} cone_equal {self.cone_equal}")
        for i in self.missing:
            out.append(f"- input row {i + 1} is not generated by the candidate")
        for i in self.extra:
            out.append(f"+ candidate row {i + 1} lies outside the input cone")
        mark = "ok" if self.size_ok else "FAIL"
        out.append(f"{mark} size {self.size} vs minimum {self.expected_size} (lineality_dim {self.lineality_dim})")
        for i in self.redundant:
            ray = "" if candidate is None else ": " + " ".join(str(x) for x in candidate[i])
            out.append(f"+ candidate row {i + 1} is a redundant ray{ray}")
        if self.bruteforce_size is not None:
            mark = "ok" if self.bruteforce_ok else "FAIL"
            out.append(f"{mark} exhaustive subset minimum {self.bruteforce_size}")
        return out


def verify_minimum(S: GeneratorSet, G: GeneratorSet, cap: int = 12) -> MinimumReport:
    """Check that ``G`` generates ``cone(S)`` with the fewest possible vectors.

    The target size is recomputed from a fresh frame of ``S``: ``d + 1`` for a
    nontrivial lineality space of dimension ``d``, plus the conic part of the
    frame. For pointed ``S`` with at most ``cap`` generators it is also
    compared with exhaustive search.
    """
    missing = [i for i in range(len(S)) if not _in_cone(S[i], G)]
    extra = [j for j in range(len(G)) if not _in_cone(G[j], S)]
    frame = conecore.reduce_ci(S)
    dec = conecore.decompose(frame)
    d = dec.lineality_dim
    expected = (d + 1 if d >= 1 else 0) + len(dec.conic_part)
    report = MinimumReport(
        cone_equal=not missing and not extra,
        size=len(G),
        expected_size=expected,
        lineality_dim=d,
        missing=missing,
        extra=extra,
        redundant=conecore.redundant_indices(G),
    )
    if len(S) <= cap and d == 0:
        report.bruteforce_size = len(bruteforce_min_subset(S, cap))
    return report
