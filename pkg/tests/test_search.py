from cuspcheck.branchdata import branch_from_newton_pairs, one_pair
from cuspcheck.curvecheck import curve
from cuspcheck.numerics import IntPoly
from cuspcheck.search import (
    candidate_pipeline,
    classification_tags,
    counterexample_curve,
    enumerate_one_pair,
    fibonacci,
    listed_triples,
    one_pair_triples,
)


def by_triple(verdicts):
    return {(v.d, *v.newton_pairs[0]): v for v in verdicts}


def test_fibonacci():
    assert [fibonacci(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_degree_five():
    v = by_triple(enumerate_one_pair(5))
    assert v[(5, 4, 5)].dp_holds and v[(5, 2, 13)].dp_holds
    assert not v[(5, 3, 7)].dp_holds


def test_degree_sixteen_tags():
    v = by_triple(enumerate_one_pair(16))
    assert v[(8, 3, 22)].dp_holds and "e" in v[(8, 3, 22)].tags
    assert v[(16, 6, 43)].dp_holds and "f" in v[(16, 6, 43)].tags


def test_degree_ten_case_c():
    v = by_triple(enumerate_one_pair(10))
    assert v[(10, 4, 25)].dp_holds and "c" in v[(10, 4, 25)].tags


def test_counterexample_pipeline():
    v = candidate_pipeline(counterexample_curve())
    assert v.genus_ok and v.dp_holds and not v.semicontinuity_ok
    assert v.semicontinuity_failures == ((12, 56, 55),)
    assert v.refuted


def test_cubic_pipeline():
    v = candidate_pipeline(curve(3, one_pair(2, 3)))
    assert v.tags == ("a",) and not v.refuted
    assert v.virtdim == 0 and v.stab_dim == 1 and not v.stab_assumed


def test_three_seven_pipeline():
    v = candidate_pipeline(curve(5, one_pair(3, 7)))
    assert not v.dp_holds and v.d_poly == IntPoly([0, -1, 1]) and v.refuted


def test_triples_satisfy_genus_and_are_ordered():
    for d in range(3, 30):
        ts = one_pair_triples(d)
        assert ts == sorted(ts)
        for a, b in ts:
            assert (a - 1) * (b - 1) == (d - 1) * (d - 2)


def test_listed_entries_pass_every_filter():
    v = by_triple(enumerate_one_pair(20))
    for t in listed_triples(20):
        assert v[t].dp_holds and v[t].semicontinuity_ok and v[t].virtdim_nonneg, t
        assert classification_tags(*t)


def test_filters_are_independent():
    assert not candidate_pipeline(curve(5, one_pair(3, 7))).dp_holds
    big = candidate_pipeline(curve(17, branch_from_newton_pairs([(2, 7), (4, 17)])))
    assert big.dp_holds and not big.semicontinuity_ok


def test_worker_count_does_not_change_output():
    assert enumerate_one_pair(14, workers=1) == enumerate_one_pair(14, workers=3)
