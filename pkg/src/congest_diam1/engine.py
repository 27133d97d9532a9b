"""Deterministic round-synchronous broadcast simulator.

One algorithm instance runs per vertex and every message is delivered to
all underlying-graph neighbors of the sender, regardless of arc
directions. Round 0 is the setup round: ``init`` runs and the round-0
``step`` call (which receives nothing) produces the first broadcast.
For every later round r the engine delivers to each vertex the messages
its neighbors produced in round r-1, keyed by sender id, then collects
the vertex's round-r broadcast and optional final output. A run solves
its task in k rounds when every vertex has produced an output by the
end of round k.

Per-message bit budgets are enforced at send time; exceeding the budget
aborts the run. Reaching the round limit with unhalted vertices is
recorded in the report rather than raised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable

from .graph import Digraph
from .messages import encode_width

BroadcastMessage = str


@dataclass(frozen=True)
class VertexContext:
    """Everything a vertex knows before the first round."""

    vertex: int
    n: int
    out_neighbors: frozenset[int]
    in_neighbors: frozenset[int]
    neighbors: frozenset[int]
    is_source: bool = False


class VertexAlgorithm:
    """Per-vertex behavior driven by the engine.

    ``step`` must be a pure function of the state accumulated from
    ``init`` and earlier steps; once an output is returned it is final.
    """

    def init(self, ctx: VertexContext) -> None:
        raise NotImplementedError

    def step(
        self, round_index: int, received: dict[int, BroadcastMessage]
    ) -> tuple[BroadcastMessage, Any]:
        """Return (outgoing message, output or None to keep running)."""
        raise NotImplementedError


@dataclass(frozen=True)
class BitBudget:
    """Per-message bit limit enforced at send time."""

    limit: int

    def __post_init__(self) -> None:
        if self.limit < 0:
            raise ValueError("bit budget must be non-negative")

    @classmethod
    def default(cls, n: int) -> "BitBudget":
        """Two fixed-width fields: 2 * encode_width(n) bits."""
        return cls(2 * encode_width(n))


class BudgetExceeded(RuntimeError):
    def __init__(self, vertex: int, round_index: int, bits: int, limit: int):
        super().__init__(
            f"vertex {vertex} sent {bits} bits in round {round_index}, "
            f"budget is {limit}"
        )
        self.vertex = vertex
        self.round_index = round_index
        self.bits = bits
        self.limit = limit


def _encode_output(value: Any) -> Any:
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return value if value != math.inf else "inf"
    if isinstance(value, str):
        return value
    raise TypeError(f"cannot serialize vertex output of type {type(value)!r}")


@dataclass
class RunReport:
    """Transcript summary of one simulation run."""

    rounds_used: int
    max_message_bits: int
    per_vertex_outputs: dict[int, Any]
    per_round_bits: list[list[int]] = field(repr=False)
    unhalted: tuple[int, ...] = ()

    def to_json_dict(self) -> dict:
        doc = {
            "rounds": self.rounds_used,
            "max_bits": self.max_message_bits,
            "outputs": {
                str(v): _encode_output(out)
                for v, out in self.per_vertex_outputs.items()
            },
            "per_round_bits": self.per_round_bits,
        }
        if self.unhalted:
            doc["unhalted"] = list(self.unhalted)
        return doc


def run(
    g: Digraph,
    factory: Callable[[], VertexAlgorithm],
    max_rounds: int,
    budget: BitBudget | None = None,
    source: int | None = None,
) -> RunReport:
    """Simulate ``factory``-built vertices on g for at most ``max_rounds`` rounds.

    Vertices are processed in ascending id order each round, so runs are
    deterministic. ``source`` marks one vertex via ``ctx.is_source``.
    """
    n = g.n
    if n < 1:
        raise ValueError("simulation needs at least one vertex")
    if max_rounds < 0:
        raise ValueError("max_rounds must be non-negative")
    if budget is None:
        budget = BitBudget.default(n)

    und = [g.underlying_neighbors(v) for v in range(n)]
    algos: list[VertexAlgorithm] = []
    for v in range(n):
        algo = factory()
        algo.init(
            VertexContext(
                vertex=v,
                n=n,
                out_neighbors=frozenset(g.out_neighbors(v)),
                in_neighbors=frozenset(g.in_neighbors(v)),
                neighbors=frozenset(und[v]),
                is_source=(v == source),
            )
        )
        algos.append(algo)

    outputs: dict[int, Any] = {}
    outbox: list[str] = [""] * n
    per_round_bits: list[list[int]] = []
    max_bits = 0
    rounds_used = 0

    for r in range(max_rounds + 1):
        prev = outbox
        row = [0] * n
        nxt = [""] * n
        for v in range(n):
            if v in outputs:
                continue  # halted vertices keep broadcasting the empty message
            received = {} if r == 0 else {u: prev[u] for u in und[v]}
            msg, out = algos[v].step(r, received)
            if not isinstance(msg, str) or msg.strip("01"):
                raise ValueError(
                    f"vertex {v} produced a non-bit-string message {msg!r}"
                )
            if len(msg) > budget.limit:
                raise BudgetExceeded(v, r, len(msg), budget.limit)
            nxt[v] = msg
            row[v] = len(msg)
            if out is not None:
                outputs[v] = out
        per_round_bits.append(row)
        max_bits = max(max_bits, max(row))
        outbox = nxt
        rounds_used = r
        if len(outputs) == n:
            break

    unhalted = tuple(v for v in range(n) if v not in outputs)
    return RunReport(rounds_used, max_bits, outputs, per_round_bits, unhalted)
