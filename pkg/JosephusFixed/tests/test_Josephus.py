import pytest
from hypothesis import given
from hypothesis.strategies import integers, sampled_from

from JosephusFixed.Errors import DomainError
from JosephusFixed.Josephus import (Methods, SurvivorQuery, elimination_order, is_fixed_point, j2_fixed_point,
                                    j2_rotate, survivor, survivor_recurrence, survivor_simulate)


@pytest.mark.parametrize("n, k, expected", [(1, 3, 1), (2, 3, 2), (5, 3, 4), (13, 3, 13), (5, 2, 3), (1, 2, 1)])
def test_survivor_examples(n, k, expected):
    assert survivor_simulate(n, k) == expected
    assert survivor_recurrence(n, k) == expected


def test_recurrence_reaches_table_value():
    assert survivor_recurrence(4045, 3) == 4045


def test_elimination_order_follows_counting_convention():
    # seat 1 is "count 1", the seat after a victim restarts the count
    assert elimination_order(5, 3) == [3, 1, 5, 2, 4]
    assert elimination_order(7, 2) == [2, 4, 6, 1, 5, 3, 7]


@pytest.mark.parametrize("k", [2, 3, 4])
def test_oracles_agree(k):
    for n in range(1, 1501):
        assert survivor_simulate(n, k) == survivor_recurrence(n, k)


@given(integers(1, 10**4), sampled_from([2, 3, 4]))
def test_oracles_agree_sampled(n, k):
    assert survivor_simulate(n, k) == survivor_recurrence(n, k)


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3, 4])
def test_oracles_agree_exhaustive(k):
    for n in range(1, 10**4 + 1):
        assert survivor_simulate(n, k) == survivor_recurrence(n, k)


@given(integers(1, 3000), integers(2, 9))
def test_survivor_in_range(n, k):
    assert 1 <= survivor_recurrence(n, k) <= n


def test_j2_rotate_matches_recurrence():
    for n in range(1, 2**12 + 1):
        assert j2_rotate(n) == survivor_recurrence(n, 2)


def test_j2_rotate_examples():
    assert j2_rotate(1) == 1
    assert j2_rotate(7) == 7
    assert j2_rotate(5) == 3
    assert j2_rotate(2**40) == 1
    assert j2_rotate(2**100 - 1) == 2**100 - 1


@pytest.mark.parametrize("ell", range(1, 11))
def test_j2_fixed_points(ell):
    assert j2_fixed_point(ell) == 2**ell - 1
    assert is_fixed_point(2**ell - 1, 2)


def test_is_fixed_point():
    assert is_fixed_point(46, 3)
    assert not is_fixed_point(47, 3)
    assert is_fixed_point(1023, 2)


@pytest.mark.parametrize("call", [
    lambda: survivor_simulate(0, 3),
    lambda: survivor_recurrence(5, 1),
    lambda: survivor_simulate(10**6 + 1, 3),
    lambda: j2_rotate(0),
    lambda: SurvivorQuery(0, 2),
    lambda: survivor(SurvivorQuery(5, 3), Methods.ROTATE2),
    lambda: survivor(SurvivorQuery(5, 3), "guess"),
])
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_survivor_dispatch():
    query = SurvivorQuery(13, 3)
    assert survivor(query, Methods.SIM) == survivor(query, Methods.RECURRENCE) == 13
    assert survivor(SurvivorQuery(5, 2), Methods.ROTATE2) == 3
