"""Baseline distributed BFS: distance flooding along directed arcs.

The source starts at distance 0 and broadcasts it. A vertex that hears
distance d from an in-neighbor (in the directed input graph) adopts
d + 1 when that improves its tentative distance, and re-broadcasts on
every improvement. All vertices halt at the end of round n with their
tentative distance, math.inf if none was ever set. This needs as many
rounds as the largest finite distance from the source, in contrast with
the constant-round protocols available on underlying-complete digraphs.
"""

from __future__ import annotations

import math
from functools import partial
from typing import Any

from .engine import VertexAlgorithm, VertexContext
from .messages import decode_uint, encode_uint


class _BfsVertex(VertexAlgorithm):
    def __init__(self, source: int):
        self._source = source

    def init(self, ctx: VertexContext) -> None:
        self._ctx = ctx
        self._dist: int | None = 0 if ctx.vertex == self._source else None
        self._pending = self._dist is not None

    def step(self, round_index: int, received: dict[int, str]) -> tuple[str, Any]:
        ctx = self._ctx
        n = ctx.n
        if round_index > 0:
            for u, msg in received.items():
                if msg and u in ctx.in_neighbors:
                    candidate = decode_uint(msg, n) + 1
                    if self._dist is None or candidate < self._dist:
                        self._dist = candidate
                        self._pending = True
        if round_index >= n:
            return "", self._dist if self._dist is not None else math.inf
        out = ""
        if self._pending:
            out = encode_uint(self._dist, n)
            self._pending = False
        return out, None


def bfs_sssp_protocol(source: int):
    """Vertex-algorithm factory; run with max_rounds >= n."""
    return partial(_BfsVertex, source)
