"""Directed-graph data model, underlying-graph helpers and exchange formats."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable


class InvalidInput(ValueError):
    """An input violates a documented hypothesis of the operation."""


class Digraph:
    """Immutable simple directed graph on vertex ids 0..n-1.

    Self-loops and repeated arcs are rejected; the anti-parallel pair
    (u, v), (v, u) may both be present. Edge membership is O(1) and
    neighbor iteration is O(degree).
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        pairs = frozenset((int(u), int(v)) for u, v in edges)
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        self._n = n
        self._edges = pairs
        self._adj: tuple | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def _adjacency(self) -> tuple:
        # built lazily, cached; the graph value itself never changes
        if self._adj is None:
            out: list[list[int]] = [[] for _ in range(self._n)]
            inc: list[list[int]] = [[] for _ in range(self._n)]
            und: list[set[int]] = [set() for _ in range(self._n)]
            for u, v in self._edges:
                out[u].append(v)
                inc[v].append(u)
                und[u].add(v)
                und[v].add(u)
            self._adj = (
                tuple(tuple(sorted(vs)) for vs in out),
                tuple(tuple(sorted(vs)) for vs in inc),
                tuple(tuple(sorted(vs)) for vs in und),
            )
        return self._adj

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise ValueError(f"vertex {v} out of range for n={self._n}")

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edges

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency()[0][v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency()[1][v]

    def underlying_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency()[2][v]

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors(v))

    def in_degree(self, v: int) -> int:
        return len(self.in_neighbors(v))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Digraph(n={self._n}, edges={len(self._edges)})"

    # -- exchange formats ---------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: edges sorted lexicographically."""
        return {"n": self._n, "edges": [list(e) for e in sorted(self._edges)]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Digraph":
        return cls(int(data["n"]), [(int(u), int(v)) for u, v in data["edges"]])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Digraph":
        return cls.from_json_dict(json.loads(text))

    def to_edge_list(self) -> str:
        """Plain text form: first line is n, then one 'u v' line per edge."""
        lines = [str(self._n)]
        lines.extend(f"{u} {v}" for u, v in sorted(self._edges))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "Digraph":
        lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
        if not lines:
            raise ValueError("empty edge-list text")
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise ValueError(f"bad edge line: {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
        return cls(n, edges)


def degree_profile(g: Digraph, v: int) -> tuple[int, int]:
    """(in-degree, out-degree) of v."""
    g._check_vertex(v)
    return g.in_degree(v), g.out_degree(v)


def is_underlying_complete(g: Digraph) -> bool:
    """True when every unordered pair is linked by at least one arc."""
    return all(
        g.has_edge(u, v) or g.has_edge(v, u)
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def underlying_diameter(g: Digraph) -> int | float:
    """Diameter of the undirected graph obtained by forgetting directions.

    Returns math.inf when the underlying graph is disconnected.
    """
    if g.n < 1:
        raise ValueError("underlying_diameter needs at least one vertex")
    best = 0
    for start in range(g.n):
        dist = [-1] * g.n
        dist[start] = 0
        queue = deque([start])
        far = 0
        while queue:
            v = queue.popleft()
            far = dist[v]
            for u in g.underlying_neighbors(v):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        if any(d < 0 for d in dist):
            return math.inf
        best = max(best, far)
    return best


@dataclass(frozen=True)
class ReachMatrix:
    """Square boolean matrix; entry (x, y) means y is reachable from x."""

    rows: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for x, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("reach matrix must be square")
            if not row[x]:
                raise ValueError("reach matrix diagonal must be true")

    @property
    def n(self) -> int:
        return len(self.rows)

    def reachable(self, x: int, y: int) -> bool:
        return self.rows[x][y]

    def row_set(self, x: int) -> set[int]:
        return {y for y, hit in enumerate(self.rows[x]) if hit}

    def to_json(self) -> list[str]:
        return ["".join("1" if hit else "0" for hit in row) for row in self.rows]


@dataclass(frozen=True)
class DistMatrix:
    """Square matrix of hop counts; math.inf marks unreachable pairs."""

    rows: tuple[tuple[int | float, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        for x, row in enumerate(self.rows):
            if len(row) != n:
                raise ValueError("distance matrix must be square")
            if row[x] != 0:
                raise ValueError("distance matrix diagonal must be zero")
            for e in row:
                if e == math.inf:
                    continue
                if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                    raise ValueError(f"bad distance entry {e!r}")

    @property
    def n(self) -> int:
        return len(self.rows)

    def distance(self, x: int, y: int) -> int | float:
        return self.rows[x][y]

    def to_json(self) -> list[list]:
        return [[e if e != math.inf else "inf" for e in row] for row in self.rows]
