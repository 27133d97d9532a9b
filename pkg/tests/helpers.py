"""Test-local reference implementations, kept independent of the package's
oracle code paths."""

from __future__ import annotations

import math
import random
from collections import deque

from congest_diam1 import Digraph


def ref_reachable(g: Digraph, source: int) -> set[int]:
    """Plain iterative DFS."""
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for u, w in g.edges:
            if u == v and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def ref_distances(g: Digraph, source: int) -> list[int | float]:
    """Plain queue BFS over the raw edge set."""
    dist: list[int | float] = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u, w in g.edges:
            if u == v and dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def random_digraph(rng: random.Random, n: int, p: float = 0.4) -> Digraph:
    """Arbitrary digraph, not necessarily underlying-complete."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < p
    ]
    return Digraph(n, edges)


def random_tournament(rng: random.Random, n: int) -> Digraph:
    """One arc per unordered pair, random direction."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, edges)
