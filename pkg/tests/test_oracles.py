import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from congest_diam1 import (
    Digraph,
    DistMatrix,
    InvalidInput,
    ReachMatrix,
    apsp_oracle,
    closed_set_check,
    enumerate_diam1_digraphs,
    gen_random_diam1,
    reach_oracle,
    reachable_from,
    sssp_oracle,
)
from helpers import random_digraph, ref_distances, ref_reachable


def test_reach_oracle_examples(tournament3, cycle3):
    r = reach_oracle(tournament3)
    assert r.row_set(0) == {0, 1, 2}
    assert r.row_set(2) == {2}
    assert reach_oracle(cycle3).to_json() == ["111", "111", "111"]
    assert reach_oracle(Digraph(3)).to_json() == ["100", "010", "001"]


def test_apsp_oracle_examples(tournament3, cycle3):
    d = apsp_oracle(cycle3)
    assert d.distance(0, 2) == 2
    assert all(d.distance(x, x) == 0 for x in range(3))
    assert apsp_oracle(tournament3).distance(2, 0) == math.inf


def test_matrix_containers_validate():
    with pytest.raises(ValueError):
        ReachMatrix(((False,),))
    with pytest.raises(ValueError):
        DistMatrix(((1,),))
    with pytest.raises(ValueError):
        DistMatrix(((0, -1), (1, 0)))


def test_closed_set_examples(tournament3):
    assert closed_set_check(tournament3, {2}) == (2, 2, True)
    assert closed_set_check(tournament3, {0}) == (-2, 2, False)
    assert closed_set_check(tournament3, {0, 1, 2}) == (0, 0, True)
    assert closed_set_check(tournament3, set()) == (0, 0, True)


def test_closed_set_rejects_incomplete_graph():
    with pytest.raises(InvalidInput):
        closed_set_check(Digraph(3, [(0, 1)]), {0})


def test_closed_set_biconditional_exhaustive_small():
    for n in range(1, 4):
        for g in enumerate_diam1_digraphs(n):
            for mask in range(2**n):
                subset = {v for v in range(n) if mask >> v & 1}
                lhs, rhs, no_outgoing = closed_set_check(g, subset)
                assert (lhs == rhs) == no_outgoing


@settings(max_examples=60)
@given(st.integers(2, 10), st.integers(0, 10**6))
def test_degree_sum_decomposition_arbitrary_digraphs(n, seed):
    # lhs always equals |arcs into the set| - |arcs out of the set|,
    # with no completeness hypothesis needed
    rng = random.Random(seed)
    g = random_digraph(rng, n)
    subset = {v for v in range(n) if rng.random() < 0.5}
    lhs = sum(g.in_degree(v) - g.out_degree(v) for v in subset)
    into = sum(1 for u, v in g.edges if u not in subset and v in subset)
    out = sum(1 for u, v in g.edges if u in subset and v not in subset)
    assert lhs == into - out


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_oracles_agree_with_reference_search(n, seed):
    rng = random.Random(seed)
    g = random_digraph(rng, n)
    reach = reach_oracle(g)
    dist = apsp_oracle(g)
    for v in range(n):
        assert reach.row_set(v) == ref_reachable(g, v)
        assert list(dist.rows[v]) == ref_distances(g, v)
        assert sssp_oracle(g, v) == tuple(ref_distances(g, v))
        assert reachable_from(g, v) == ref_reachable(g, v)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10**6))
def test_finite_distance_iff_reachable(n, seed):
    g = gen_random_diam1(n, 1 / 3, seed)
    reach = reach_oracle(g)
    dist = apsp_oracle(g)
    for x in range(n):
        for y in range(n):
            assert (dist.distance(x, y) != math.inf) == reach.reachable(x, y)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.integers(0, 10**6))
def test_out_degree_rank_pairs_within_two_hops(n, seed):
    # on underlying-complete digraphs, x reaches y within 2 hops
    # whenever out-degree(x) >= out-degree(y)
    g = gen_random_diam1(n, 1 / 3, seed)
    dist = apsp_oracle(g)
    for x in range(n):
        for y in range(n):
            if g.out_degree(x) >= g.out_degree(y):
                assert dist.distance(x, y) <= 2


def test_triangle_inequality_on_random_diam1():
    g = gen_random_diam1(24, 1 / 3, 99)
    d = apsp_oracle(g)
    for x in range(g.n):
        for z in range(g.n):
            step = d.distance(x, z)
            if step == math.inf:
                continue
            for y in range(g.n):
                tail = d.distance(z, y)
                if tail != math.inf:
                    assert d.distance(x, y) <= step + tail
