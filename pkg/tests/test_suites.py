from congest_diam1.suites import (
    SUITES,
    suite_distance_sandwich,
    suite_f_sequences,
    suite_family_validators,
    suite_reach_from_degrees_exhaustive,
    suite_sigma_injectivity,
)


def test_registry_names():
    assert set(SUITES) == {
        "lemma1",
        "lemma2-exhaustive",
        "fseq",
        "sandwich",
        "families",
        "injectivity",
    }


def test_reach_from_degrees_suite():
    result = suite_reach_from_degrees_exhaustive()
    assert result.passed
    # 760 graphs on n <= 4, every start vertex, two tie-break orders
    assert result.checks == 2 * (1 * 1 + 3 * 2 + 27 * 3 + 729 * 4)


def test_f_sequence_suite_small():
    result = suite_f_sequences(count=30, max_n=24, seed=1)
    assert result.passed and result.checks > 0


def test_sandwich_suite_small():
    result = suite_distance_sandwich(count=30, max_n=24, seed=1)
    assert result.passed and result.checks > 0


def test_family_suite_small():
    result = suite_family_validators(max_kq=3, max_k_j=3, sigmas_per=8, seed=1)
    assert result.passed


def test_injectivity_suite_small():
    result = suite_sigma_injectivity(max_k_f=6, max_q_f=2, max_k_j=3)
    assert result.passed
    # F contributes sum over k<=6 of 2^k per q, J contributes 1 + 4 + 27
    assert result.checks == 2 * (2 + 4 + 8 + 16 + 32 + 64) + 32


def test_failures_carry_replayable_payloads(monkeypatch):
    import congest_diam1.suites as suites_mod

    # force a mismatch by lying about the oracle
    monkeypatch.setattr(
        suites_mod, "reach_oracle", lambda g: _FakeOracle(g.n)
    )
    result = suite_reach_from_degrees_exhaustive()
    assert not result.passed
    assert result.failures
    assert "graph" in result.failures[0]


class _FakeOracle:
    def __init__(self, n):
        self.n = n

    def row_set(self, x):
        return set()
