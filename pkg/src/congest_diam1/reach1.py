"""One-round all-pairs reachability for underlying-complete digraphs.

Each vertex broadcasts its degree pair once. On an underlying-complete
digraph, order the vertices by non-decreasing out-degree; the set
reachable from the vertex at position i is the prefix {v_1, ..., v_k}
for the smallest k >= i+1 satisfying

    (n - k) * k == sum over the first k of (in-degree - out-degree),

so the whole reachability matrix is a pure function of the degree
table. The decision work per vertex is O(n^2).
"""

from __future__ import annotations

from functools import lru_cache, partial
from typing import Any, Sequence

from .engine import VertexAlgorithm, VertexContext
from .graph import InvalidInput, ReachMatrix
from .messages import decode_pair, decode_uint, encode_uint, pair_message

DegreeTable = Sequence[tuple[int, int]]  # (d_in, d_out) indexed by vertex id


def _scan_rows(table: tuple[tuple[int, int], ...]) -> tuple[list, int]:
    """All reach rows plus an operation count for the O(n^2) budget check."""
    n = len(table)
    order = sorted(range(n), key=lambda v: (table[v][1], v))
    prefix = [0] * (n + 1)
    for j, v in enumerate(order):
        prefix[j + 1] = prefix[j] + table[v][0] - table[v][1]
    ops = n
    rows: list[tuple[bool, ...] | None] = [None] * n
    for pos in range(n):
        found = 0
        for k in range(pos + 1, n + 1):
            ops += 1
            if (n - k) * k == prefix[k]:
                found = k
                break
        if not found:
            raise InvalidInput(
                "no prefix satisfies the degree identity; "
                "the degree table cannot come from an underlying-complete digraph"
            )
        row = [False] * n
        for j in range(found):
            row[order[j]] = True
        ops += found
        rows[order[pos]] = tuple(row)
    return rows, ops


def reachable_set_from_degrees(
    table: DegreeTable, ordering: Sequence[int], position: int
) -> set[int]:
    """Reachable set of the vertex at ``position`` (0-based) in ``ordering``.

    ``ordering`` must be a permutation of all vertex ids sorted by
    non-decreasing out-degree; any tie-break is valid.
    """
    n = len(table)
    if sorted(ordering) != list(range(n)):
        raise ValueError("ordering must be a permutation of all vertex ids")
    d_outs = [table[v][1] for v in ordering]
    if any(a > b for a, b in zip(d_outs, d_outs[1:])):
        raise ValueError("ordering must be sorted by non-decreasing out-degree")
    if not 0 <= position < n:
        raise ValueError(f"position {position} out of range")
    prefix = 0
    hits = []
    for k, v in enumerate(ordering, start=1):
        prefix += table[v][0] - table[v][1]
        if k >= position + 1 and (n - k) * k == prefix:
            hits.append(k)
            break
    if not hits:
        raise InvalidInput(
            "no prefix satisfies the degree identity; "
            "the degree table cannot come from an underlying-complete digraph"
        )
    return set(ordering[: hits[0]])


@lru_cache(maxsize=16)
def _matrix_from_table(table: tuple[tuple[int, int], ...]) -> ReachMatrix:
    rows, _ = _scan_rows(table)
    return ReachMatrix(tuple(rows))


def reach_matrix_from_degrees(table: DegreeTable) -> ReachMatrix:
    """Full reachability matrix from a complete degree table."""
    return _matrix_from_table(tuple((int(a), int(b)) for a, b in table))


class _Reach1Vertex(VertexAlgorithm):
    """Broadcast the degree pair, then decide every row from the table.

    With ``in_degree_only`` set, only the in-degree is sent (half the
    bits) and out-degrees are reconstructed as n-1 minus in-degree;
    valid only for underlying-complete digraphs with no anti-parallel
    arcs.
    """

    def __init__(self, in_degree_only: bool = False):
        self._in_only = in_degree_only

    def init(self, ctx: VertexContext) -> None:
        self._ctx = ctx
        self._d_in = len(ctx.in_neighbors)
        self._d_out = len(ctx.out_neighbors)

    def step(self, round_index: int, received: dict[int, str]) -> tuple[str, Any]:
        n = self._ctx.n
        if round_index == 0:
            if self._in_only:
                return encode_uint(self._d_in, n), None
            return pair_message(self._d_in, self._d_out, n), None

        table: list[tuple[int, int] | None] = [None] * n
        if self._in_only:
            table[self._ctx.vertex] = (self._d_in, n - 1 - self._d_in)
            for u, msg in received.items():
                d_in = decode_uint(msg, n)
                table[u] = (d_in, n - 1 - d_in)
        else:
            table[self._ctx.vertex] = (self._d_in, self._d_out)
            for u, msg in received.items():
                table[u] = decode_pair(msg, n)
        if any(entry is None for entry in table):
            raise InvalidInput(
                "degree table is incomplete; the underlying graph is not complete"
            )
        return "", _matrix_from_table(tuple(table))


def reach1_protocol(in_degree_only: bool = False):
    """Vertex-algorithm factory; run with max_rounds >= 1."""
    return partial(_Reach1Vertex, in_degree_only)
