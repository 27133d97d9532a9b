"""Generators and validators for the structured hard-instance families.

Family F: k disjoint directed paths of q vertices each, a source s with
an arc to the first vertex of path i exactly when bit i of a hidden
k-bit string sigma is 1, and a sink u that every other vertex points
to. Which path tails are reachable from s encodes sigma.

Family J: k disjoint directed paths where path i has sigma(i) + k
vertices (sigma is a sequence over 1..k), s points at every path head,
and every other vertex points at the sink u. The distances from s to
the k path tails encode sigma.

Family Fprime: family F with s deleted and, for every i with
sigma(i) = 1, the arc from path i's first vertex to u reversed; u then
plays the source role.

Random family R1: every unordered pair gets both arcs with a given
probability, otherwise a single uniformly random direction, so the
underlying graph is always complete.

Vertex numbering is fixed for reproducibility: s is 0 where present,
path vertices are numbered path-major then by position, and u takes
the last id.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .graph import Digraph, is_underlying_complete, underlying_diameter
from .oracles import reachable_from, sssp_oracle

ROLE_SOURCE = "s"
ROLE_SINK = "u"


def role_path_vertex(i: int, j: int) -> str:
    """Role tag of the j-th named vertex on path i (both 1-based)."""
    return f"v{i}_{j}"


def role_path_head(i: int) -> str:
    return f"u{i}"


@dataclass(frozen=True)
class InstanceDescriptor:
    """Identifies one generated instance: family tag plus parameters."""

    family: str
    k: int | None = None
    q: int | None = None
    sigma: str | tuple[int, ...] | None = None
    n: int | None = None
    p: float | None = None
    seed: int | None = None

    def to_string(self) -> str:
        if self.family in ("F", "Fprime"):
            return f"{self.family}:k={self.k},q={self.q},sigma={self.sigma}"
        if self.family == "J":
            sigma = "-".join(str(x) for x in self.sigma)
            return f"J:k={self.k},sigma={sigma}"
        if self.family == "R1":
            parts = [f"n={self.n}", f"p={self.p:g}"]
            if self.seed is not None:
                parts.append(f"seed={self.seed}")
            return "R1:" + ",".join(parts)
        raise ValueError(f"unknown family {self.family!r}")


def parse_descriptor(text: str) -> InstanceDescriptor:
    """Parse strings like "F:k=3,q=5,sigma=101" or "R1:n=32,p=0.33,seed=7"."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"descriptor {text!r}: missing ':' after family tag")
    family = head.strip()
    if family not in ("F", "J", "Fprime", "R1"):
        raise ValueError(f"descriptor {text!r}: unknown family {family!r} at position 0")
    fields: dict[str, str] = {}
    offset = len(head) + 1
    for part in rest.split(","):
        key, eq, value = part.partition("=")
        if not eq or not key.strip() or not value.strip():
            raise ValueError(
                f"descriptor {text!r}: expected key=value at position {offset}, got {part!r}"
            )
        if key.strip() in fields:
            raise ValueError(
                f"descriptor {text!r}: duplicate key {key.strip()!r} at position {offset}"
            )
        fields[key.strip()] = value.strip()
        offset += len(part) + 1

    def need(key: str) -> str:
        if key not in fields:
            raise KeyError(key)
        return fields.pop(key)

    try:
        if family in ("F", "Fprime"):
            desc = InstanceDescriptor(
                family=family, k=int(need("k")), q=int(need("q")), sigma=need("sigma")
            )
        elif family == "J":
            k = int(need("k"))
            sigma = tuple(int(x) for x in need("sigma").split("-"))
            desc = InstanceDescriptor(family="J", k=k, sigma=sigma)
        else:
            desc = InstanceDescriptor(
                family="R1",
                n=int(need("n")),
                p=float(fields.pop("p", "0.3333333333333333")),
                seed=int(fields.pop("seed")) if "seed" in fields else None,
            )
    except KeyError as exc:
        raise ValueError(
            f"descriptor {text!r}: missing required key {exc.args[0]!r}"
        ) from None
    except ValueError as exc:
        raise ValueError(f"descriptor {text!r}: {exc}") from None
    if fields:
        raise ValueError(
            f"descriptor {text!r}: unexpected keys {sorted(fields)}"
        )
    return desc


@dataclass(eq=False)
class LabeledInstance:
    """A generated graph plus the role tag of every named vertex."""

    graph: Digraph
    roles: dict[int, str]
    source: int | None = None

    def vertex_with_role(self, role: str) -> int:
        for v, tag in self.roles.items():
            if tag == role:
                return v
        raise KeyError(f"no vertex with role {role!r}")

    def to_json_dict(self, descriptor: str | None = None) -> dict:
        doc = self.graph.to_json_dict()
        doc["roles"] = {str(v): tag for v, tag in sorted(self.roles.items())}
        if descriptor is not None:
            doc["descriptor"] = descriptor
        return doc


def load_instance_dict(doc: dict) -> LabeledInstance:
    graph = Digraph.from_json_dict(doc)
    roles = {int(v): tag for v, tag in doc.get("roles", {}).items()}
    source = None
    for v, tag in roles.items():
        if tag == ROLE_SOURCE:
            source = v
            break
    else:
        for v, tag in roles.items():
            if tag == ROLE_SINK:
                source = v
                break
    return LabeledInstance(graph, roles, source)


def _check_bit_sigma(k: int, q: int, sigma: str) -> None:
    if k < 1 or q < 1:
        raise ValueError(f"need k >= 1 and q >= 1, got k={k}, q={q}")
    if len(sigma) != k or sigma.strip("01"):
        raise ValueError(f"sigma must be a {k}-bit string of 0/1, got {sigma!r}")


def gen_f(k: int, q: int, sigma: str) -> LabeledInstance:
    """Family F instance on k*q + 2 vertices."""
    _check_bit_sigma(k, q, sigma)
    n = k * q + 2
    s = 0
    u = n - 1
    vid = lambda i, j: 1 + (i - 1) * q + (j - 1)
    edges = []
    roles = {s: ROLE_SOURCE, u: ROLE_SINK}
    for i in range(1, k + 1):
        for j in range(1, q + 1):
            roles[vid(i, j)] = role_path_vertex(i, j)
            if j < q:
                edges.append((vid(i, j), vid(i, j + 1)))
            edges.append((vid(i, j), u))
        if sigma[i - 1] == "1":
            edges.append((s, vid(i, 1)))
    edges.append((s, u))
    return LabeledInstance(Digraph(n, edges), roles, source=s)


def expected_reach_f(k: int, q: int, sigma: str) -> set[int]:
    """Exact reachable set from s in gen_f(k, q, sigma), as vertex ids."""
    _check_bit_sigma(k, q, sigma)
    n = k * q + 2
    out = {0, n - 1}
    for i in range(1, k + 1):
        if sigma[i - 1] == "1":
            out.update(1 + (i - 1) * q + (j - 1) for j in range(1, q + 1))
    return out


def gen_j(k: int, sigma: Sequence[int]) -> LabeledInstance:
    """Family J instance; path i carries sigma[i-1] + k vertices."""
    sigma = tuple(sigma)
    if k < 1 or len(sigma) != k:
        raise ValueError(f"need k >= 1 and a length-k sigma, got k={k}, {sigma!r}")
    if any(not 1 <= x <= k for x in sigma):
        raise ValueError(f"sigma entries must lie in 1..{k}, got {sigma!r}")
    n = sum(x + k for x in sigma) + 2
    s = 0
    u = n - 1
    edges = [(s, u)]
    roles = {s: ROLE_SOURCE, u: ROLE_SINK}
    next_id = 1
    for i in range(1, k + 1):
        length = sigma[i - 1] + k
        ids = list(range(next_id, next_id + length))
        next_id += length
        roles[ids[0]] = role_path_head(i)
        for j in range(1, k + 1):
            roles[ids[length - k + j - 1]] = role_path_vertex(i, j)
        edges.append((s, ids[0]))
        for a, b in zip(ids, ids[1:]):
            edges.append((a, b))
        edges.extend((v, u) for v in ids)
    return LabeledInstance(Digraph(n, edges), roles, source=s)


def expected_dist_j(k: int, sigma: Sequence[int]) -> dict[str, int]:
    """Distances from s by role tag: heads at 1, tail j of path i at sigma[i-1] + j."""
    sigma = tuple(sigma)
    out = {ROLE_SOURCE: 0, ROLE_SINK: 1}
    for i in range(1, k + 1):
        out[role_path_head(i)] = 1
        for j in range(1, k + 1):
            out[role_path_vertex(i, j)] = sigma[i - 1] + j
    return out


def gen_fprime(k: int, q: int, sigma: str) -> LabeledInstance:
    """Family F with s removed and the first-vertex arcs of 1-bits reversed."""
    _check_bit_sigma(k, q, sigma)
    n = k * q + 1
    u = n - 1
    vid = lambda i, j: (i - 1) * q + (j - 1)
    edges = []
    roles = {u: ROLE_SINK}
    for i in range(1, k + 1):
        for j in range(1, q + 1):
            roles[vid(i, j)] = role_path_vertex(i, j)
            if j < q:
                edges.append((vid(i, j), vid(i, j + 1)))
        if sigma[i - 1] == "1":
            edges.append((u, vid(i, 1)))
            edges.extend((vid(i, j), u) for j in range(2, q + 1))
        else:
            edges.extend((vid(i, j), u) for j in range(1, q + 1))
    return LabeledInstance(Digraph(n, edges), roles, source=u)


def gen_random_diam1(n: int, antiparallel_prob: float, seed: int) -> Digraph:
    """Random digraph whose underlying graph is complete.

    Every unordered pair gets both arcs with probability
    antiparallel_prob, otherwise one uniformly random direction.
    Deterministic in seed.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= antiparallel_prob <= 1:
        raise ValueError(f"probability out of range: {antiparallel_prob}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < antiparallel_prob:
                edges.append((u, v))
                edges.append((v, u))
            elif rng.random() < 0.5:
                edges.append((u, v))
            else:
                edges.append((v, u))
    return Digraph(n, edges)


def random_diam1_corpus(
    count: int,
    n_min: int,
    n_max: int,
    seed: int,
    antiparallel_prob: float = 1 / 3,
) -> Iterator[Digraph]:
    """Seeded stream of random underlying-complete digraphs with n in [n_min, n_max]."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        yield gen_random_diam1(n, antiparallel_prob, rng.randrange(2**32))


def enumerate_diam1_digraphs(n: int) -> Iterator[Digraph]:
    """All 3^C(n,2) digraphs on n vertices whose underlying graph is complete."""
    pairs = list(combinations(range(n), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        edges = []
        for (u, v), state in zip(pairs, states):
            if state != 1:
                edges.append((u, v))
            if state != 0:
                edges.append((v, u))
        yield Digraph(n, edges)


def build_instance(desc: InstanceDescriptor, default_seed: int = 0) -> LabeledInstance:
    if desc.family == "F":
        return gen_f(desc.k, desc.q, desc.sigma)
    if desc.family == "J":
        return gen_j(desc.k, desc.sigma)
    if desc.family == "Fprime":
        return gen_fprime(desc.k, desc.q, desc.sigma)
    if desc.family == "R1":
        seed = desc.seed if desc.seed is not None else default_seed
        p = desc.p if desc.p is not None else 1 / 3
        return LabeledInstance(gen_random_diam1(desc.n, p, seed), {}, source=0)
    raise ValueError(f"unknown family {desc.family!r}")


@dataclass
class ValidationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list[ValidationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(ValidationCheck(name, bool(passed), detail))

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def validate_instance(inst: LabeledInstance, desc: InstanceDescriptor) -> ValidationReport:
    """Machine-check the structural properties the construction promises."""
    rep = ValidationReport()
    g = inst.graph

    if desc.family == "F":
        k, q, sigma = desc.k, desc.q, desc.sigma
        rep.add("vertex_count", g.n == k * q + 2, f"n={g.n}, want {k * q + 2}")
        want_edges = k * (q - 1) + sigma.count("1") + k * q + 1
        rep.add("edge_count", len(g.edges) == want_edges)
        diam = underlying_diameter(g)
        rep.add("diameter_at_most_2", diam <= 2, f"diameter={diam}")
        if k * q >= 3:
            rep.add("diameter_exactly_2", diam == 2, f"diameter={diam}")
        reach = reachable_from(g, inst.vertex_with_role(ROLE_SOURCE))
        rep.add("reach_from_source", reach == expected_reach_f(k, q, sigma))
    elif desc.family == "J":
        k, sigma = desc.k, desc.sigma
        want_n = sum(x + k for x in sigma) + 2
        rep.add("vertex_count", g.n == want_n, f"n={g.n}, want {want_n}")
        want_edges = sum(x + k - 1 for x in sigma) + k + (want_n - 1)
        rep.add("edge_count", len(g.edges) == want_edges)
        diam = underlying_diameter(g)
        rep.add("diameter_at_most_2", diam <= 2, f"diameter={diam}")
        if k >= 2:
            rep.add("diameter_exactly_2", diam == 2, f"diameter={diam}")
        dist = sssp_oracle(g, inst.vertex_with_role(ROLE_SOURCE))
        want = expected_dist_j(k, sigma)
        bad = [
            role
            for role, d in want.items()
            if dist[inst.vertex_with_role(role)] != d
        ]
        rep.add("distances_from_source", not bad, f"mismatched roles: {bad}")
    elif desc.family == "Fprime":
        k, q, sigma = desc.k, desc.q, desc.sigma
        rep.add("vertex_count", g.n == k * q + 1, f"n={g.n}, want {k * q + 1}")
        rep.add("edge_count", len(g.edges) == k * (q - 1) + k * q)
        rep.add("no_source_vertex", ROLE_SOURCE not in inst.roles.values())
        diam = underlying_diameter(g)
        rep.add("diameter_at_most_2", diam <= 2, f"diameter={diam}")
        u = inst.vertex_with_role(ROLE_SINK)
        want = {u}
        for i in range(1, k + 1):
            if sigma[i - 1] == "1":
                want.update(
                    inst.vertex_with_role(role_path_vertex(i, j))
                    for j in range(1, q + 1)
                )
        rep.add("reach_from_sink", reachable_from(g, u) == want)
    elif desc.family == "R1":
        rep.add("vertex_count", g.n == desc.n, f"n={g.n}, want {desc.n}")
        rep.add("underlying_complete", is_underlying_complete(g))
    else:
        rep.add("known_family", False, f"unknown family {desc.family!r}")
    return rep
