"""Two-round 3-approximate all-pairs distances for underlying-complete digraphs.

Round 1 broadcasts out-degrees; round 2 broadcasts, for each vertex of
positive out-degree, the maximum out-degree among its outgoing
neighbors. For a vertex x, a threshold sequence f_0[x], f_1[x], ... is
then computable from those two tables alone: f_0[x] is the largest
out-degree within {x} and its outgoing neighbors, and each later entry
lifts the previous threshold to the largest out-degree that is directly
entered from below it (absent entries are None and stay None). The
estimated distance from x to y is 3*(i+1) for the smallest index i with
f_i[x] >= out-degree(y), infinity when no index works, and 0 on the
diagonal. On an underlying-complete digraph the estimate is finite
exactly for reachable pairs and lies within a factor of 3 above the
true distance.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

from .engine import VertexAlgorithm, VertexContext
from .graph import Digraph, DistMatrix, InvalidInput
from .messages import decode_uint, encode_uint


@dataclass(frozen=True)
class FSequence:
    """Threshold sequence of one vertex; entries are ints or None."""

    owner: int
    values: tuple

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("threshold sequence must not be empty")


def m_values(g: Digraph) -> dict[int, int | None]:
    """Per vertex, the maximum out-degree over its outgoing neighbors.

    None for vertices with no outgoing arcs.
    """
    out: dict[int, int | None] = {}
    for v in range(g.n):
        nbrs = g.out_neighbors(v)
        out[v] = max(g.out_degree(u) for u in nbrs) if nbrs else None
    return out


def _threshold_table_from_graph(g: Digraph) -> list[int | None]:
    """table[i] = largest out-degree among vertices that are entered from
    out-degree <= i and themselves exceed i; None when no such vertex."""
    n = g.n
    d_out = [g.out_degree(v) for v in range(n)]
    entered_from = [
        min((d_out[w] for w in g.in_neighbors(u)), default=None) for u in range(n)
    ]
    table: list[int | None] = [None] * n
    for i in range(n):
        best = None
        for u in range(n):
            low = entered_from[u]
            if low is not None and low <= i < d_out[u]:
                if best is None or d_out[u] > best:
                    best = d_out[u]
        table[i] = best
    return table


@lru_cache(maxsize=8)
def _threshold_table_from_degrees(
    d_out: tuple[int, ...], m: tuple[int | None, ...]
) -> tuple[int | None, ...]:
    """Same table recovered from out-degrees and per-vertex maxima only."""
    n = len(d_out)
    table: list[int | None] = [None] * n
    for i in range(n):
        best = None
        for v in range(n):
            mv = m[v]
            if mv is not None and 0 < d_out[v] <= i and mv > i:
                if best is None or mv > best:
                    best = mv
        table[i] = best
    return tuple(table)


def _sequence_values(f0: int, table: Sequence[int | None], n: int) -> tuple:
    values: list[int | None] = [f0]
    cur: int | None = f0
    for _ in range(n):
        cur = table[cur] if cur is not None else None
        values.append(cur)
    return tuple(values)


def f_sequences_global(g: Digraph) -> tuple[FSequence, ...]:
    """Threshold sequences of every vertex, straight from the graph."""
    n = g.n
    table = _threshold_table_from_graph(g)
    seqs = []
    for x in range(n):
        group = (x,) + g.out_neighbors(x)
        f0 = max(g.out_degree(v) for v in group)
        seqs.append(FSequence(x, _sequence_values(f0, table, n)))
    return tuple(seqs)


def f_sequence_global(g: Digraph, x: int) -> FSequence:
    g._check_vertex(x)
    return f_sequences_global(g)[x]


def f_sequence_local(
    d_out_table: Sequence[int], m_table: Sequence[int | None], x: int, n: int
) -> FSequence:
    """Threshold sequence of x from the two broadcastable tables alone."""
    if len(d_out_table) != n or len(m_table) != n:
        raise ValueError("tables must have one entry per vertex")
    table = _threshold_table_from_degrees(tuple(d_out_table), tuple(m_table))
    f0 = 0 if d_out_table[x] == 0 else max(d_out_table[x], m_table[x])
    return FSequence(x, _sequence_values(f0, table, n))


def estimate_distance(
    fx: FSequence, d_out_y: int, same_vertex: bool
) -> int | float:
    """0 on the diagonal, else 3*(i+1) for the smallest crossing index i,
    or math.inf when the sequence never reaches d_out_y."""
    if same_vertex:
        return 0
    n = len(fx.values) - 1
    for i in range(n):
        v = fx.values[i]
        if v is None:
            break
        if v >= d_out_y:
            return 3 * (i + 1)
    return math.inf


@lru_cache(maxsize=16)
def _matrix_from_tables(
    d_out: tuple[int, ...], m: tuple[int | None, ...]
) -> DistMatrix:
    n = len(d_out)
    table = _threshold_table_from_degrees(d_out, m)
    rows = []
    for x in range(n):
        f0 = 0 if d_out[x] == 0 else max(d_out[x], m[x])
        values = _sequence_values(f0, table, n)
        prefix: list[int] = []
        for v in values:
            if v is None:
                break
            prefix.append(v)
        row: list[int | float] = []
        for y in range(n):
            if x == y:
                row.append(0)
                continue
            idx = bisect_left(prefix, d_out[y])
            row.append(3 * (idx + 1) if idx < len(prefix) else math.inf)
        rows.append(tuple(row))
    return DistMatrix(tuple(rows))


def estimate_matrix(
    d_out_table: Sequence[int], m_table: Sequence[int | None]
) -> DistMatrix:
    """Estimated-distance matrix from the two broadcastable tables."""
    return _matrix_from_tables(tuple(d_out_table), tuple(m_table))


class _Apsp3Vertex(VertexAlgorithm):
    def init(self, ctx: VertexContext) -> None:
        self._ctx = ctx
        self._d_out = len(ctx.out_neighbors)
        self._d_out_table: list[int | None] = []
        self._m_self: int | None = None

    def step(self, round_index: int, received: dict[int, str]) -> tuple[str, Any]:
        ctx = self._ctx
        n = ctx.n
        if round_index == 0:
            return encode_uint(self._d_out, n), None
        if round_index == 1:
            table: list[int | None] = [None] * n
            table[ctx.vertex] = self._d_out
            for u, msg in received.items():
                table[u] = decode_uint(msg, n)
            if any(entry is None for entry in table):
                raise InvalidInput(
                    "out-degree table is incomplete; "
                    "the underlying graph is not complete"
                )
            self._d_out_table = table
            self._m_self = (
                max(table[u] for u in ctx.out_neighbors)
                if ctx.out_neighbors
                else None
            )
            # zero-out-degree vertices still emit one fixed-width field;
            # receivers discard it using the round-1 table
            return encode_uint(self._m_self or 0, n), None

        m_table: list[int | None] = [None] * n
        m_table[ctx.vertex] = self._m_self
        for u, msg in received.items():
            if self._d_out_table[u] > 0:
                m_table[u] = decode_uint(msg, n)
        return "", _matrix_from_tables(
            tuple(self._d_out_table), tuple(m_table)
        )


def apsp3_protocol():
    """Vertex-algorithm factory; run with max_rounds >= 2."""
    return _Apsp3Vertex
