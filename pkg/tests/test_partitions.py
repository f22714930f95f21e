from hypothesis import given
from hypothesis import strategies as st

from qqengine.partitions import (
    arm,
    arm_leg_pairs,
    cells,
    conjugate,
    contains,
    enumerate_partitions,
    kappa,
    leg,
    norm_sq,
    partition,
    size,
    sub_partitions,
    tuples,
    z_factor,
)

partitions_st = st.lists(st.integers(1, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 1)) == (2, 1)


def test_arm_leg_examples():
    assert (arm((3, 1), (0, 0)), leg((3, 1), (0, 0))) == (2, 1)
    assert (arm((1,), (0, 0)), leg((1,), (0, 0))) == (0, 0)
    assert (arm((2, 2), (0, 1)), leg((2, 2), (0, 1))) == (0, 1)


def test_norm_and_kappa_examples():
    assert norm_sq((3, 1)) == 10
    assert kappa((2, 1)) == 0
    assert kappa((2,)) == 2


def test_enumeration_examples():
    assert list(enumerate_partitions(0)) == [()]
    assert len(enumerate_partitions(4)) == 5
    # 2 + 1 + 2 = 5 pairs (the count r(r+3)/2 at r = 2)
    assert len(tuples(2, 2)) == 5


def test_contains_examples():
    assert contains((), (2, 1))
    assert contains((1, 1), (2, 1))
    assert not contains((2,), (1, 1))


def test_partition_validation():
    assert partition([2, 1, 0]) == (2, 1)
    for bad in ([1, 2], [-1]):
        try:
            partition(bad)
        except ValueError:
            continue
        raise AssertionError(f"{bad} accepted")


def test_partition_counts():
    assert [len(enumerate_partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [len(tuples(2, n)) for n in range(5)] == [1, 2, 5, 10, 20]


def test_enumeration_is_lex_descending_and_distinct():
    ps = list(enumerate_partitions(6))
    assert ps == sorted(ps, reverse=True)
    assert len(set(ps)) == len(ps)


def test_z_factor():
    # z_(2,1,1) = 2 * 1^2 * 2!
    assert z_factor((2, 1, 1)) == 4


@given(partitions_st)
def test_conjugation_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert size(conjugate(lam)) == size(lam)


@given(partitions_st)
def test_arm_and_leg_sums(lam):
    pairs = list(arm_leg_pairs(lam))
    # sum of arms = sum_i binom(lam_i, 2); sum of legs = sum_j binom(lam^t_j, 2)
    assert sum(a for a, _ in pairs) == sum(p * (p - 1) // 2 for p in lam)
    assert sum(l for _, l in pairs) == sum(p * (p - 1) // 2 for p in conjugate(lam))


@given(partitions_st)
def test_kappa_and_norms(lam):
    assert kappa(lam) == norm_sq(lam) - norm_sq(conjugate(lam))
    assert kappa(conjugate(lam)) == -kappa(lam)


@given(partitions_st)
def test_sub_partitions_are_contained(lam):
    subs = sub_partitions(lam)
    assert () in subs and lam in subs
    assert all(contains(mu, lam) for mu in subs)
    assert len(list(cells(lam))) == size(lam)
