import json

import pytest

from congest_diam1 import (
    BitBudget,
    BudgetExceeded,
    Digraph,
    VertexAlgorithm,
    decode_uint,
    encode_uint,
    gen_random_diam1,
    reach1_protocol,
    run,
)


class HaltInInit(VertexAlgorithm):
    def init(self, ctx):
        self.ctx = ctx

    def step(self, round_index, received):
        return "", "x"


class Probe(VertexAlgorithm):
    """Broadcast own id once, halt with the decoded received map."""

    def init(self, ctx):
        self.ctx = ctx

    def step(self, round_index, received):
        if round_index == 0:
            return encode_uint(self.ctx.vertex, self.ctx.n), None
        decoded = {u: decode_uint(m, self.ctx.n) for u, m in received.items()}
        return "", json.dumps(decoded, sort_keys=True)


class NeverHalts(VertexAlgorithm):
    def init(self, ctx):
        pass

    def step(self, round_index, received):
        return "", None


class Chatty(VertexAlgorithm):
    def __init__(self, bits):
        self.bits = bits

    def init(self, ctx):
        pass

    def step(self, round_index, received):
        return "1" * self.bits, None


class SilentThenHalt(VertexAlgorithm):
    """Vertex 0 halts at round 0, the rest at round 2."""

    def init(self, ctx):
        self.ctx = ctx

    def step(self, round_index, received):
        if self.ctx.vertex == 0:
            return "", 0
        if round_index < 2:
            return "1", None
        return "", round_index


def test_halt_in_init_uses_zero_rounds():
    g = Digraph(3, [(0, 1), (1, 2), (0, 2)])
    report = run(g, HaltInInit, max_rounds=5)
    assert report.rounds_used == 0
    assert not report.unhalted
    assert report.per_vertex_outputs == {0: "x", 1: "x", 2: "x"}
    assert report.max_message_bits == 0


def test_delivery_keys_are_exactly_underlying_neighbors():
    # directions are irrelevant for delivery
    g = Digraph(4, [(0, 1), (2, 1), (3, 2)])
    report = run(g, Probe, max_rounds=1)
    assert report.rounds_used == 1
    for v in range(4):
        got = json.loads(report.per_vertex_outputs[v])
        assert {int(k) for k in got} == set(g.underlying_neighbors(v))
        # senders identify themselves correctly
        assert all(int(k) == val for k, val in got.items())


def test_empty_messages_still_delivered():
    class EmptyProbe(VertexAlgorithm):
        def init(self, ctx):
            self.ctx = ctx

        def step(self, round_index, received):
            if round_index == 0:
                return "", None
            return "", sorted(received)

    g = Digraph(3, [(0, 1), (1, 2)])
    report = run(g, EmptyProbe, max_rounds=1)
    assert report.per_vertex_outputs[1] == [0, 2]
    assert report.per_vertex_outputs[0] == [1]


def test_budget_exceeded_identifies_vertex_and_round():
    g = Digraph(2, [(0, 1)])
    with pytest.raises(BudgetExceeded) as err:
        run(g, lambda: Chatty(bits=3), max_rounds=2, budget=BitBudget(2))
    assert err.value.vertex == 0
    assert err.value.round_index == 0
    assert err.value.bits == 3


def test_zero_length_messages_cost_nothing():
    g = Digraph(2, [(0, 1)])
    report = run(g, lambda: Chatty(bits=0), max_rounds=1, budget=BitBudget(0))
    assert report.max_message_bits == 0
    assert report.unhalted == (0, 1)


def test_not_halted_is_reported_not_raised():
    g = Digraph(2, [(0, 1)])
    report = run(g, NeverHalts, max_rounds=3)
    assert report.rounds_used == 3
    assert report.unhalted == (0, 1)
    assert "unhalted" in report.to_json_dict()


def test_halted_vertices_keep_broadcasting_empty():
    g = Digraph(3, [(0, 1), (1, 2), (0, 2)])
    report = run(g, SilentThenHalt, max_rounds=4)
    assert report.rounds_used == 2
    # vertex 0 emitted nothing after halting at round 0
    assert [row[0] for row in report.per_round_bits] == [0, 0, 0]
    assert [row[1] for row in report.per_round_bits] == [1, 1, 0]


def test_rejects_non_bit_string_messages():
    class Bad(VertexAlgorithm):
        def init(self, ctx):
            pass

        def step(self, round_index, received):
            return "2", None

    with pytest.raises(ValueError, match="bit-string"):
        run(Digraph(1), Bad, max_rounds=1)


def test_run_validates_arguments():
    with pytest.raises(ValueError):
        run(Digraph(0), HaltInInit, max_rounds=1)
    with pytest.raises(ValueError):
        run(Digraph(1), HaltInInit, max_rounds=-1)


def test_default_budget():
    assert BitBudget.default(17).limit == 10
    assert BitBudget.default(2).limit == 2
    assert BitBudget.default(1).limit == 2
    with pytest.raises(ValueError):
        BitBudget(-1)


def test_deterministic_reports():
    g = gen_random_diam1(17, 1 / 3, 7)
    a = run(g, reach1_protocol(), max_rounds=1)
    b = run(g, reach1_protocol(), max_rounds=1)
    assert json.dumps(a.to_json_dict(), sort_keys=True) == json.dumps(
        b.to_json_dict(), sort_keys=True
    )


def test_source_flag_in_context():
    class SourceProbe(VertexAlgorithm):
        def init(self, ctx):
            self.ctx = ctx

        def step(self, round_index, received):
            return "", int(self.ctx.is_source)

    g = Digraph(3, [(0, 1), (1, 2)])
    report = run(g, SourceProbe, max_rounds=0, source=1)
    assert report.per_vertex_outputs == {0: 0, 1: 1, 2: 0}
