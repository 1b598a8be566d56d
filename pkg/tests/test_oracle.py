import numpy as np
import pytest

from wonderful_strata.coxeter import bruhat_leq
from wonderful_strata.oracle import (
    SUITES, FalsificationError, SweepConfig, SweepResult, brute_bruhat_table,
    brute_coset_extremes, brute_demazure_family, run_suite,
)
from wonderful_strata.oracle import brute, sweeps

from conftest import system


def test_a1_table(A1):
    T = brute_bruhat_table(A1)
    assert T.order.tolist() == [[True, True], [False, True]]
    assert T.covers == [(0, 1)]
    assert T.words == [(), (0,)]


@pytest.mark.parametrize("label", ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3"])
def test_bruhat_relation_counts(golden, label):
    T = brute_bruhat_table(system(label))
    n = T.order.shape[0]
    assert int(T.order.sum()) - n == golden["bruhat_relations"][label]


def test_table_agrees_with_descent_recursion(B2):
    T = brute_bruhat_table(B2)
    for x in B2:
        for y in B2:
            assert T.leq(x, y) == bruhat_leq(x, y)
    assert [len(w) for w in T.words] == [w.length for w in B2]
    assert all(B2.from_word(T.words[w.index]) == w for w in B2)


def test_table_cap(B3):
    brute_bruhat_table(B3)
    with pytest.raises(ValueError, match="cap"):
        brute_bruhat_table(system("B3"), cap=10)


def test_demazure_family_examples(A2):
    T = brute_bruhat_table(A2)
    s0, s1, e = A2.s(0), A2.s(1), A2.identity()
    for y in A2:
        assert brute_demazure_family(T, e, y) == (y, y, e)
    assert brute_demazure_family(T, s0 * s1, s1 * s0)[0] == A2.longest()


def test_coset_extremes(A2):
    T = brute_bruhat_table(A2)
    w0 = A2.longest()
    assert brute_coset_extremes(T, w0, [1], [0]) == (A2.s(0) * A2.s(1), w0)
    assert brute_coset_extremes(T, w0, [0, 1], []) == (A2.identity(), w0)


def test_unique_extreme_raises(A2):
    T = brute_bruhat_table(A2)
    # s0 and s1 are incomparable, so neither is a maximum
    with pytest.raises(FalsificationError):
        brute._unique_extreme(T, [A2.s(0).index, A2.s(1).index], True, "pair")


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite("nonsense")


def test_all_suites_a1_fast():
    result = run_suite("all", SweepConfig(types=("A1",)))
    assert result.passed, result.failures[:3]
    assert result.wall_time < 1.0
    assert result.types == ["A1"]
    assert set(result.details) == set(SUITES) - {"all"}


def test_appendix_suite_a2():
    result = run_suite("appendix", SweepConfig(types=("A2",)))
    assert result.passed and 1000 < result.cases < 100000


def test_monoid_suite_b3():
    result = run_suite("monoid", SweepConfig(types=("B3",)))
    assert result.passed
    assert result.details["B3"]["bruhat_relations"] == 799


def test_result_round_trip():
    result = run_suite("dl", SweepConfig(types=("A2",)))
    d = result.to_dict()
    back = SweepResult.from_dict(d)
    assert back.to_dict() == d
    assert "wall_time" not in result.to_dict(timing=False)


def test_wrong_fast_path_is_caught(monkeypatch):
    monkeypatch.setattr(sweeps, "demazure", lambda x, y: x)
    result = run_suite("monoid", SweepConfig(types=("A2",), max_witnesses=3))
    assert not result.passed
    counts = result.details["failure_counts"]
    assert counts["demazure product"] > 0
    assert sum(f["check"] == "demazure product" for f in result.failures) == 3


def test_wrong_criterion_is_caught(monkeypatch):
    from wonderful_strata import partitions
    monkeypatch.setattr(partitions, "nonempty_piece_bmb", lambda *a: True)
    result = run_suite("partitions", SweepConfig(types=("A1",)))
    assert not result.passed
    assert "refined size vs plain loop" in result.details["failure_counts"]


def test_cap_rejects_large_group():
    with pytest.raises(ValueError, match="cap"):
        run_suite("monoid", SweepConfig(types=("B3",), cap=20))
