"""Centralized brute-force ground truth, computed from the whole graph.

These routines are the reference against which the distributed protocols
are checked; they never share code with the protocol implementations.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable

import numpy as np

from .graph import Digraph, DistMatrix, InvalidInput, ReachMatrix, is_underlying_complete


def adjacency_matrix(g: Digraph) -> np.ndarray:
    """Boolean adjacency matrix, A[u, v] true when (u, v) is an arc."""
    a = np.zeros((g.n, g.n), dtype=bool)
    if g.edges:
        us, vs = zip(*g.edges)
        a[list(us), list(vs)] = True
    return a


def reach_oracle(g: Digraph) -> ReachMatrix:
    """Reflexive transitive reachability via frontier expansion from every vertex."""
    n = g.n
    adj = adjacency_matrix(g).astype(np.float32)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    while frontier.any():
        nxt = ((frontier.astype(np.float32) @ adj) > 0) & ~reached
        reached |= nxt
        frontier = nxt
    return ReachMatrix(tuple(tuple(bool(x) for x in row) for row in reached))


def apsp_oracle(g: Digraph) -> DistMatrix:
    """All-pairs hop distances via level-synchronous search from every vertex."""
    n = g.n
    adj = adjacency_matrix(g).astype(np.float32)
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    reached = np.eye(n, dtype=bool)
    frontier = np.eye(n, dtype=bool)
    level = 0
    while frontier.any():
        level += 1
        nxt = ((frontier.astype(np.float32) @ adj) > 0) & ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    rows = tuple(
        tuple(int(e) if e != math.inf else math.inf for e in row)
        for row in dist.tolist()
    )
    return DistMatrix(rows)


def reachable_from(g: Digraph, source: int) -> set[int]:
    """Vertices reachable from source (including source itself)."""
    g._check_vertex(source)
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for u in g.out_neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def sssp_oracle(g: Digraph, source: int) -> tuple[int | float, ...]:
    """Hop distances from one source; math.inf for unreachable vertices."""
    g._check_vertex(source)
    dist: list[int | float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.out_neighbors(v):
            if dist[u] == math.inf:
                dist[u] = dist[v] + 1
                queue.append(u)
    return tuple(dist)


def closed_set_check(g: Digraph, subset: Iterable[int]) -> tuple[int, int, bool]:
    """Degree-sum witness for closed vertex sets on underlying-complete digraphs.

    Returns (lhs, rhs, no_outgoing) where lhs is the sum of in-degree
    minus out-degree over the subset, rhs is |complement| * |subset|,
    and no_outgoing reports whether no arc leaves the subset. On an
    underlying-complete digraph, lhs == rhs holds exactly when
    no_outgoing is true.
    """
    members = set(subset)
    for v in members:
        g._check_vertex(v)
    if not is_underlying_complete(g):
        raise InvalidInput("closed_set_check requires an underlying-complete digraph")
    lhs = sum(g.in_degree(v) - g.out_degree(v) for v in members)
    rhs = (g.n - len(members)) * len(members)
    no_outgoing = not any(
        u not in members for v in members for u in g.out_neighbors(v)
    )
    return lhs, rhs, no_outgoing
