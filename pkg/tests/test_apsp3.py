import math

from hypothesis import given, settings
from hypothesis import strategies as st

from congest_diam1 import (
    BitBudget,
    Digraph,
    apsp3_protocol,
    apsp_oracle,
    encode_width,
    enumerate_diam1_digraphs,
    estimate_distance,
    estimate_matrix,
    f_sequence_global,
    f_sequence_local,
    f_sequences_global,
    gen_random_diam1,
    m_values,
    reach_oracle,
    run,
)


def tables(g: Digraph):
    d_out = [g.out_degree(v) for v in range(g.n)]
    m = m_values(g)
    return d_out, [m[v] for v in range(g.n)]


def test_m_values_examples(tournament3, cycle3):
    assert m_values(tournament3) == {0: 1, 1: 0, 2: None}
    assert m_values(cycle3) == {0: 1, 1: 1, 2: 1}
    # out-star: center points at two sink leaves
    assert m_values(Digraph(3, [(0, 1), (0, 2)]))[0] == 0


def test_f_sequence_global_examples(tournament3, cycle3):
    assert f_sequence_global(tournament3, 0).values == (2, None, None, None)
    assert f_sequence_global(tournament3, 2).values == (0, None, None, None)
    assert f_sequence_global(cycle3, 0).values == (1, None, None, None)


def test_f_sequence_local_matches_global(tournament3):
    d_out, m = tables(tournament3)
    for x in range(3):
        assert (
            f_sequence_local(d_out, m, x, 3).values
            == f_sequence_global(tournament3, x).values
        )


def test_f_zero_is_zero_for_sinks(tournament3):
    d_out, m = tables(tournament3)
    assert f_sequence_local(d_out, m, 2, 3).values[0] == 0


def test_estimate_distance_examples(tournament3):
    d_out, _ = tables(tournament3)
    fa = f_sequence_global(tournament3, 0)
    fc = f_sequence_global(tournament3, 2)
    assert estimate_distance(fa, d_out[1], same_vertex=False) == 3
    assert estimate_distance(fc, d_out[0], same_vertex=False) == math.inf
    assert estimate_distance(fa, 0, same_vertex=True) == 0


def test_estimate_distance_on_cycle(cycle3):
    f = f_sequence_global(cycle3, 0)
    assert estimate_distance(f, cycle3.out_degree(2), same_vertex=False) == 3


def test_estimate_matrix_example(tournament3):
    d_out, m = tables(tournament3)
    assert estimate_matrix(d_out, m).to_json() == [
        [0, 3, 3],
        ["inf", 0, 3],
        ["inf", "inf", 0],
    ]


def test_protocol_on_tournament(tournament3):
    report = run(tournament3, apsp3_protocol(), max_rounds=2)
    assert report.rounds_used == 2
    assert report.max_message_bits == encode_width(3)
    outs = list(report.per_vertex_outputs.values())
    assert all(o == outs[0] for o in outs)
    assert outs[0].to_json() == [[0, 3, 3], ["inf", 0, 3], ["inf", "inf", 0]]


def test_protocol_fits_tight_budget(tournament3):
    report = run(
        tournament3, apsp3_protocol(), max_rounds=2, budget=BitBudget(encode_width(3))
    )
    assert report.rounds_used == 2


def test_protocol_single_vertex():
    report = run(Digraph(1), apsp3_protocol(), max_rounds=2)
    assert report.per_vertex_outputs[0].rows == ((0,),)


def test_sandwich_exhaustive_n3():
    for g in enumerate_diam1_digraphs(3):
        est = estimate_matrix(*tables(g))
        dist = apsp_oracle(g)
        reach = reach_oracle(g)
        for x in range(3):
            for y in range(3):
                e = est.distance(x, y)
                if x == y:
                    assert e == 0
                elif reach.reachable(x, y):
                    assert dist.distance(x, y) <= e <= 3 * dist.distance(x, y)
                else:
                    assert e == math.inf


def test_estimates_are_zero_or_multiples_of_three():
    g = gen_random_diam1(40, 1 / 3, 12)
    est = estimate_matrix(*tables(g))
    for x in range(g.n):
        for y in range(g.n):
            e = est.distance(x, y)
            if x == y:
                assert e == 0
            else:
                assert e == math.inf or (e % 3 == 0 and 3 <= e <= 3 * g.n)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 64), st.integers(0, 10**6))
def test_local_equals_global_property(n, seed):
    g = gen_random_diam1(n, 1 / 3, seed)
    d_out, m = tables(g)
    for seq in f_sequences_global(g):
        assert f_sequence_local(d_out, m, seq.owner, n).values == seq.values


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 64), st.integers(0, 10**6))
def test_sequence_structure_property(n, seed):
    g = gen_random_diam1(n, 1 / 3, seed)
    for seq in f_sequences_global(g):
        values = seq.values
        assert len(values) == n + 1
        assert values[n] is None
        prefix = [v for v in values if v is not None]
        # strictly increasing prefix, None absorbing
        assert all(a < b for a, b in zip(prefix, prefix[1:]))
        assert all(v is None for v in values[len(prefix):])


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 48), st.integers(0, 10**6))
def test_protocol_sandwich_property(n, seed):
    g = gen_random_diam1(n, 1 / 3, seed)
    report = run(g, apsp3_protocol(), max_rounds=2)
    est = report.per_vertex_outputs[0]
    dist = apsp_oracle(g)
    for x in range(n):
        for y in range(n):
            e = est.distance(x, y)
            d = dist.distance(x, y)
            if x == y:
                assert e == 0
            elif d == math.inf:
                assert e == math.inf
            else:
                assert d <= e <= 3 * d
