"""Named property suites behind the command-line verifier.

Each suite runs a batch of machine checks against the brute-force
oracles and returns a result object carrying pass/fail counts plus
replayable counterexample payloads (instance JSON and the offending
parameters) for every failure.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .apsp3 import estimate_matrix, f_sequences_global, f_sequence_local, m_values
from .families import (
    InstanceDescriptor,
    enumerate_diam1_digraphs,
    gen_f,
    gen_fprime,
    gen_j,
    gen_random_diam1,
    random_diam1_corpus,
    role_path_vertex,
    validate_instance,
)
from .graph import Digraph
from .oracles import apsp_oracle, closed_set_check, reach_oracle, reachable_from, sssp_oracle
from .reach1 import reachable_set_from_degrees

DEFAULT_SEED = 20260


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checks: int
    failures: list[dict] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
        }


def _result(name: str, checks: int, failures: list[dict]) -> SuiteResult:
    return SuiteResult(name, not failures, checks, failures[:25])


def suite_closed_set_identity(seed: int = DEFAULT_SEED) -> SuiteResult:
    """Degree-sum identity holds exactly for sets with no outgoing arcs.

    Exhaustive over every underlying-complete digraph with n <= 4 and
    every vertex subset, then 10^4 random (graph, subset) pairs with
    n <= 64.
    """
    checks = 0
    failures: list[dict] = []

    def probe(g: Digraph, subset: frozenset[int]) -> None:
        nonlocal checks
        checks += 1
        lhs, rhs, no_outgoing = closed_set_check(g, subset)
        if (lhs == rhs) != no_outgoing:
            failures.append(
                {
                    "check": "closed_set_identity",
                    "graph": g.to_json_dict(),
                    "subset": sorted(subset),
                    "lhs": lhs,
                    "rhs": rhs,
                    "no_outgoing": no_outgoing,
                }
            )

    for n in range(1, 5):
        for g in enumerate_diam1_digraphs(n):
            for mask in range(2**n):
                probe(g, frozenset(v for v in range(n) if mask >> v & 1))

    rng = random.Random(seed)
    for _ in range(500):
        n = rng.randint(2, 64)
        g = gen_random_diam1(n, 1 / 3, rng.randrange(2**32))
        for _ in range(20):
            probe(g, frozenset(v for v in range(n) if rng.random() < 0.5))
    return _result("lemma1", checks, failures)


def suite_reach_from_degrees_exhaustive() -> SuiteResult:
    """Degree-rank reachability equals the oracle on every underlying-complete
    digraph with n <= 4, for every start vertex and two tie-break orders."""
    checks = 0
    failures: list[dict] = []
    for n in range(1, 5):
        for g in enumerate_diam1_digraphs(n):
            table = [(g.in_degree(v), g.out_degree(v)) for v in range(n)]
            oracle = reach_oracle(g)
            orders = [
                sorted(range(n), key=lambda v: (table[v][1], v)),
                sorted(range(n), key=lambda v: (table[v][1], -v)),
            ]
            for ordering in orders:
                for pos in range(n):
                    checks += 1
                    got = reachable_set_from_degrees(table, ordering, pos)
                    want = oracle.row_set(ordering[pos])
                    if got != want:
                        failures.append(
                            {
                                "check": "reach_from_degrees",
                                "graph": g.to_json_dict(),
                                "ordering": ordering,
                                "position": pos,
                                "got": sorted(got),
                                "want": sorted(want),
                            }
                        )
    return _result("lemma2-exhaustive", checks, failures)


def suite_f_sequences(
    count: int = 200, max_n: int = 64, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """Threshold sequences are strictly increasing until None, end at None,
    and the table-only recovery matches the whole-graph definition."""
    checks = 0
    failures: list[dict] = []
    for g in random_diam1_corpus(count, 2, max_n, seed):
        n = g.n
        d_out = [g.out_degree(v) for v in range(n)]
        m = m_values(g)
        m_list = [m[v] for v in range(n)]
        for seq in f_sequences_global(g):
            checks += 1
            values = seq.values
            bad = None
            if len(values) != n + 1 or values[n] is not None:
                bad = "length_or_tail"
            seen_none = False
            for a, b in zip(values, values[1:]):
                if a is None:
                    seen_none = True
                if seen_none and b is not None:
                    bad = "none_not_absorbing"
                if a is not None and b is not None and not a < b:
                    bad = "not_increasing"
            local = f_sequence_local(d_out, m_list, seq.owner, n)
            if local.values != values:
                bad = "local_mismatch"
            if bad:
                failures.append(
                    {
                        "check": bad,
                        "graph": g.to_json_dict(),
                        "vertex": seq.owner,
                        "values": [v if v is not None else "none" for v in values],
                    }
                )
    return _result("fseq", checks, failures)


def suite_distance_sandwich(
    count: int = 500, max_n: int = 64, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """Estimates are finite exactly for reachable pairs and lie in [d, 3d]."""
    checks = 0
    failures: list[dict] = []
    for g in random_diam1_corpus(count, 2, max_n, seed):
        n = g.n
        d_out = [g.out_degree(v) for v in range(n)]
        m = m_values(g)
        est = estimate_matrix(d_out, [m[v] for v in range(n)])
        dist = apsp_oracle(g)
        for x in range(n):
            for y in range(n):
                checks += 1
                d = dist.distance(x, y)
                e = est.distance(x, y)
                ok = e == 0 if x == y else (
                    e == math.inf if d == math.inf else d <= e <= 3 * d
                )
                if not ok:
                    failures.append(
                        {
                            "check": "sandwich",
                            "graph": g.to_json_dict(),
                            "pair": [x, y],
                            "distance": d if d != math.inf else "inf",
                            "estimate": e if e != math.inf else "inf",
                        }
                    )
    return _result("sandwich", checks, failures)


def _sigma_samples(k: int, per_pair: int, rng: random.Random) -> list[str]:
    if 2**k <= per_pair:
        return [format(x, f"0{k}b") for x in range(2**k)]
    seen: set[str] = set()
    while len(seen) < per_pair:
        seen.add("".join(rng.choice("01") for _ in range(k)))
    return sorted(seen)


def _j_sigma_samples(k: int, per_pair: int, rng: random.Random) -> list[tuple[int, ...]]:
    if k**k <= per_pair:
        out = []
        def rec(prefix: tuple[int, ...]) -> None:
            if len(prefix) == k:
                out.append(prefix)
                return
            for x in range(1, k + 1):
                rec(prefix + (x,))
        rec(())
        return out
    seen: set[tuple[int, ...]] = set()
    while len(seen) < per_pair:
        seen.add(tuple(rng.randint(1, k) for _ in range(k)))
    return sorted(seen)


def suite_family_validators(
    max_kq: int = 6, max_k_j: int = 5, sigmas_per: int = 50, seed: int = DEFAULT_SEED
) -> SuiteResult:
    """Every generated F / J / Fprime instance passes its validator."""
    rng = random.Random(seed)
    checks = 0
    failures: list[dict] = []

    def record(desc: InstanceDescriptor, report) -> None:
        nonlocal checks
        checks += 1
        if not report.passed:
            failures.append(
                {
                    "check": "validator",
                    "descriptor": desc.to_string(),
                    "report": report.to_json_dict(),
                }
            )

    for k in range(1, max_kq + 1):
        for q in range(1, max_kq + 1):
            for sigma in _sigma_samples(k, sigmas_per, rng):
                desc = InstanceDescriptor("F", k=k, q=q, sigma=sigma)
                record(desc, validate_instance(gen_f(k, q, sigma), desc))
                desc = InstanceDescriptor("Fprime", k=k, q=q, sigma=sigma)
                record(desc, validate_instance(gen_fprime(k, q, sigma), desc))
    for k in range(1, max_k_j + 1):
        for sigma in _j_sigma_samples(k, sigmas_per, rng):
            desc = InstanceDescriptor("J", k=k, sigma=sigma)
            record(desc, validate_instance(gen_j(k, sigma), desc))
    return _result("families", checks, failures)


def suite_sigma_injectivity(
    max_k_f: int = 12, max_q_f: int = 4, max_k_j: int = 5
) -> SuiteResult:
    """The observable outputs determine the hidden string.

    Family F: the reachability pattern at the k path tails, over all
    2^k strings. Family J: the distance vector at the k path tails,
    over all k^k sequences.
    """
    checks = 0
    failures: list[dict] = []
    for k in range(1, max_k_f + 1):
        for q in range(1, max_q_f + 1):
            seen: dict[tuple, str] = {}
            for x in range(2**k):
                sigma = format(x, f"0{k}b")
                inst = gen_f(k, q, sigma)
                reach = reachable_from(inst.graph, inst.source)
                signature = tuple(
                    inst.vertex_with_role(role_path_vertex(i, q)) in reach
                    for i in range(1, k + 1)
                )
                checks += 1
                if signature in seen:
                    failures.append(
                        {
                            "check": "reach_signature_collision",
                            "family": "F",
                            "k": k,
                            "q": q,
                            "sigmas": [seen[signature], sigma],
                        }
                    )
                else:
                    seen[signature] = sigma
    rng = random.Random(0)
    for k in range(1, max_k_j + 1):
        seen_j: dict[tuple, tuple] = {}
        for sigma in _j_sigma_samples(k, k**k, rng):
            inst = gen_j(k, sigma)
            dist = sssp_oracle(inst.graph, inst.source)
            signature = tuple(
                dist[inst.vertex_with_role(role_path_vertex(i, k))]
                for i in range(1, k + 1)
            )
            checks += 1
            if signature in seen_j:
                failures.append(
                    {
                        "check": "distance_signature_collision",
                        "family": "J",
                        "k": k,
                        "sigmas": [list(seen_j[signature]), list(sigma)],
                    }
                )
            else:
                seen_j[signature] = sigma
    return _result("injectivity", checks, failures)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "lemma1": lambda seed=DEFAULT_SEED: suite_closed_set_identity(seed=seed),
    "lemma2-exhaustive": lambda seed=DEFAULT_SEED: suite_reach_from_degrees_exhaustive(),
    "fseq": lambda seed=DEFAULT_SEED: suite_f_sequences(seed=seed),
    "sandwich": lambda seed=DEFAULT_SEED: suite_distance_sandwich(seed=seed),
    "families": lambda seed=DEFAULT_SEED: suite_family_validators(seed=seed),
    "injectivity": lambda seed=DEFAULT_SEED: suite_sigma_injectivity(),
}
