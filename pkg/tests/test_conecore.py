import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conegen import (
    GeneratorSet,
    cone_equal,
    decompose,
    is_pointed,
    lineal_part,
    member,
    minimize,
    reduce_ci,
)
from conegen.conecore import redundant_indices, reduce_ci_indices
from conegen.ratcore import DimensionError, dot, extract_basis, vector
from conftest import caratheodory_member, small_int_vectors


def gs(*rows, n=None):
    return GeneratorSet.of(rows, ambient_dim=n)


def rows(S):
    return [tuple(int(x) if x.denominator == 1 else x for x in v) for v in S]


# -- member --------------------------------------------------------------


def test_member_examples():
    cert = member((1, 1), gs((1, 0), (0, 1)))
    assert cert is not None and cert.coefficients == (1, 1)
    assert cert.as_map() == {0: 1, 1: 1}
    assert member((-1, 0), gs((1, 0), (0, 1))) is None
    cert = member((0, 0), gs(n=2))
    assert cert is not None and cert.coefficients == ()


def test_member_dimension_mismatch():
    with pytest.raises(DimensionError):
        member((1, 2, 3), gs((1, 0)))


def test_generator_set_validation():
    with pytest.raises(DimensionError):
        gs((1, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        GeneratorSet(0, ())
    with pytest.raises(ValueError):
        GeneratorSet.of([])


# -- reduce_ci -----------------------------------------------------------


@pytest.mark.parametrize(
    "S, expected",
    [
        ([(1, 0), (0, 1), (1, 1)], [(1, 0), (0, 1)]),
        ([(1, 0), (2, 0)], [(2, 0)]),
        ([(1, 0), (-1, 0), (0, 1)], [(1, 0), (-1, 0), (0, 1)]),
        ([(0, 0), (1, 2), (0, 0)], [(1, 2)]),
        ([(1, 1), (0, 0), (1, 1)], [(1, 1)]),
    ],
)
def test_reduce_ci_examples(S, expected):
    assert rows(reduce_ci(gs(*S))) == expected


def test_reduce_ci_empty():
    assert len(reduce_ci(gs(n=3))) == 0


# -- lineal_part / is_pointed ---------------------------------------------


def test_lineal_part_examples():
    assert lineal_part(gs((1, 0), (-1, 0), (0, 1))) == [0, 1]
    assert lineal_part(gs((1, 0), (0, 1))) == []
    assert lineal_part(gs((1, 0), (-1, 0), (0, 1), (0, -1))) == [0, 1, 2, 3]


def test_lineal_part_jobs_do_not_change_result():
    S = gs((1, 0, 0), (-1, 0, 0), (0, 1, 1), (2, -1, -1), (0, 0, 1))
    assert lineal_part(S, jobs=2) == lineal_part(S)


def test_is_pointed_examples():
    assert is_pointed(gs((1, 0), (0, 1)))
    assert not is_pointed(gs((1, 0), (-1, 0)))
    assert is_pointed(gs(n=2))
    assert is_pointed(gs((0, 0), (1, 0)))


# -- decompose -----------------------------------------------------------


def test_decompose_x_axis(half_plane):
    dec = decompose(half_plane)
    assert dec.lineal_part == (0, 1)
    assert dec.conic_part == (2,)
    assert dec.lineality_basis == (0,)
    assert dec.lineality_dim == 1
    assert dec.projected_conic == (vector([0, 1]),)


def test_decompose_strips_lineal_component():
    dec = decompose(gs((1, 0), (-1, 0), (1, 1)))
    assert dec.projected_conic == (vector([0, 1]),)


def test_decompose_tilted_lineality():
    # L = span(1, 1); (1, 0) projects to (1/2, -1/2)
    dec = decompose(gs((1, 1), (-1, -1), (1, 0)))
    assert dec.lineality_dim == 1
    assert dec.projected_conic == ((F(1, 2), F(-1, 2)),)


def test_decompose_pointed_is_identity():
    S = gs((1, 2), (3, 1), (1, 1))
    dec = decompose(S)
    assert dec.lineal_part == () and dec.lineality_basis == ()
    assert dec.lineality_dim == 0
    assert dec.projected_conic == S.vectors


# -- minimize ------------------------------------------------------------


@pytest.mark.parametrize(
    "S, expected",
    [
        ([(1, 0), (0, 1), (1, 1)], [(1, 0), (0, 1)]),
        ([(1, 0), (-1, 0), (0, 1), (0, -1)], [(1, 0), (0, 1), (-1, -1)]),
        ([(1, 0), (-1, 0), (0, 1)], [(1, 0), (-1, 0), (0, 1)]),
        ([(0, 0)], []),
    ],
)
def test_minimize_examples(S, expected):
    assert rows(minimize(gs(*S))) == expected


def test_minimize_empty():
    assert len(minimize(gs(n=2))) == 0


def test_minimize_output_order():
    # B ascending, then -sum(B), then the conic part in input order;
    # (0,0,1) = (1,1,1) + (-1,0,0) + (0,-1,0) is dropped first
    S = gs((0, 0, 1), (1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0), (1, 1, 1))
    assert rows(minimize(S)) == [(1, 0, 0), (0, 1, 0), (-1, -1, 0), (1, 1, 1)]
    S = gs((0, 0, 1), (0, 1, 0), (1, 0, 0), (0, -1, 0), (-1, 0, 0), (0, 0, 2))
    assert rows(minimize(S)) == [(0, 1, 0), (1, 0, 0), (-1, -1, 0), (0, 0, 2)]


# -- cone_equal ----------------------------------------------------------


def test_cone_equal_examples():
    assert cone_equal(gs((1, 0), (0, 1), (1, 1)), gs((1, 0), (0, 1)))
    assert cone_equal(gs((1, 0)), gs((2, 0)))
    assert not cone_equal(gs((1, 0)), gs((-1, 0)))
    with pytest.raises(DimensionError):
        cone_equal(gs((1, 0)), gs((1, 0, 0)))


def test_redundant_indices():
    assert redundant_indices(gs((1, 0), (0, 1), (1, 1))) == [2]
    assert redundant_indices(gs((1, 0), (-1, 0))) == []


# -- properties ----------------------------------------------------------

generator_sets = st.integers(1, 3).flatmap(
    lambda n: small_int_vectors(n, 0, 6, -2, 2).map(lambda vs: GeneratorSet(n, tuple(vs)))
)


@settings(max_examples=120, deadline=None)
@given(generator_sets)
def test_reduce_ci_is_a_frame(S):
    kept = reduce_ci_indices(S)
    out = S.subset(kept)
    assert kept == sorted(kept)
    for i in range(len(out)):
        assert not caratheodory_member(out[i], out.without(i).vectors)
    for i in set(range(len(S))) - set(kept):
        assert caratheodory_member(S[i], out.vectors)
    assert cone_equal(S, out)


@settings(max_examples=120, deadline=None)
@given(generator_sets)
def test_minimize_invariants(S):
    frame = reduce_ci(S)
    G = minimize(S)
    assert cone_equal(S, G)
    assert len(frame) <= 2 * len(G)
    if is_pointed(S):
        assert len(frame) == len(G)
    # no vector of G is redundant
    assert redundant_indices(G) == []


@settings(max_examples=120, deadline=None)
@given(generator_sets)
def test_projected_conic_is_pointed(S):
    dec = decompose(S)
    proj = GeneratorSet(S.ambient_dim, dec.projected_conic)
    assert is_pointed(proj)
    for p in dec.projected_conic:
        for i in dec.lineality_basis:
            assert dot(p, S[i]) == 0
    assert set(dec.lineal_part) | set(dec.conic_part) == set(range(len(S)))
    assert not set(dec.lineal_part) & set(dec.conic_part)


@settings(max_examples=120, deadline=None)
@given(generator_sets)
def test_frame_projection_injective(S):
    frame = reduce_ci(S)
    proj = decompose(frame).projected_conic
    assert len(set(proj)) == len(proj)


@settings(max_examples=80, deadline=None)
@given(generator_sets)
def test_frame_lineal_structure(S):
    frame = reduce_ci(S)
    dec = decompose(frame)
    H = [frame[i] for i in dec.lineal_part]
    d = dec.lineality_dim
    assert len(H) <= 2 * d
    basis = set(extract_basis(H))
    rest = [h for k, h in enumerate(H) if k not in basis]
    assert len(extract_basis(rest)) == len(rest)


@settings(max_examples=60, deadline=None)
@given(generator_sets)
def test_subsets_of_a_frame_are_frames(S):
    frame = reduce_ci(S)
    idx = range(len(frame))
    for size in range(len(frame) + 1):
        for T in itertools.combinations(idx, size):
            sub = frame.subset(T)
            assert reduce_ci(sub) == sub


@settings(max_examples=80, deadline=None)
@given(generator_sets, st.lists(st.fractions(min_value=F(1, 5), max_value=5), min_size=6, max_size=6))
def test_scale_invariance(S, factors):
    scaled = GeneratorSet(S.ambient_dim, tuple(tuple(f * x for x in v) for f, v in zip(factors, S)))
    assert len(reduce_ci(scaled)) == len(reduce_ci(S))
    assert len(minimize(scaled)) == len(minimize(S))


@settings(max_examples=60, deadline=None)
@given(generator_sets, st.randoms(use_true_random=False))
def test_permutation_keeps_minimum_size(S, rnd):
    base = len(minimize(S))
    for _ in range(3):
        perm = list(range(len(S)))
        rnd.shuffle(perm)
        assert len(minimize(S.subset(perm))) == base
