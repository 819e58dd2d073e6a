import random

import pytest

from f2venn.gf2 import PointSet, iter_bits, popcount, random_subset
from f2venn.zerosum import (
    build_zero_sum_space,
    enumerate_even_zero_sums,
    is_even_zero_sum,
    sumset,
)

import invariant_checks
from sample_sets import S1


def mask_of(*indices):
    return sum(1 << i for i in indices)


def all_even_zero_sums(S):
    return sorted(m for m in range(1 << len(S)) if is_even_zero_sum(S, m))


def test_running_generators():
    space = build_zero_sum_space(S1)
    assert space.rank == 3
    assert space.generators == (
        mask_of(10, *range(7)),
        mask_of(11, *range(3, 10)),
        mask_of(12, 2, 3, 7),
    )
    assert is_even_zero_sum(S1, mask_of(12, 2, 3, 7))


def test_membership_edge_cases():
    assert is_even_zero_sum(S1, 0)
    assert not is_even_zero_sum(S1, mask_of(0, 1, 2))
    assert not is_even_zero_sum(S1, mask_of(0, 1))
    with pytest.raises(ValueError):
        is_even_zero_sum(S1, 1 << 13)


def test_degenerate_spaces():
    for S in (PointSet(3, ()), PointSet(3, (6,)), PointSet(3, (0, 1, 2, 4))):
        space = build_zero_sum_space(S)
        assert space.rank == 0
        assert enumerate_even_zero_sums(space) == [0]


def test_enumeration_order():
    space = build_zero_sum_space(S1)
    g1, g2, g3 = space.generators
    assert enumerate_even_zero_sums(space) == [0, g3, g2, g2 ^ g3, g1, g1 ^ g3, g1 ^ g2, g1 ^ g2 ^ g3]


def test_sumset_rejects_basis_points():
    space = build_zero_sum_space(S1)
    assert sumset(space, mask_of(10, 12)) == space.generators[0] ^ space.generators[2]
    with pytest.raises(ValueError):
        sumset(space, mask_of(0))


def test_rank_formula_on_random_sets():
    assert invariant_checks.rank_formula(seed=11) == 1000


def test_closure_under_symmetric_difference():
    invariant_checks.closure(seed=12)


def test_dependent_part_of_sumset():
    rng = random.Random(13)
    checked = 0
    while checked < 40:
        S = random_subset(rng, 4, rng.randint(6, 15))
        space = build_zero_sum_space(S)
        if space.rank > 10:
            continue
        checked += 1
        D = space.dependent_mask
        sub = D
        while True:
            assert sumset(space, sub) & D == sub
            if sub == 0:
                break
            sub = (sub - 1) & D


def test_enumeration_matches_exhaustive_search():
    rng = random.Random(14)
    for _ in range(60):
        n = rng.randint(2, 5)
        S = random_subset(rng, n, rng.randint(1, min(16, 1 << n)))
        space = build_zero_sum_space(S)
        listed = enumerate_even_zero_sums(space)
        assert len(set(listed)) == 1 << space.rank
        assert sorted(listed) == all_even_zero_sums(S)


def test_independent_of_input_order():
    rng = random.Random(15)
    for _ in range(200):
        n = rng.randint(2, 5)
        S = random_subset(rng, n, rng.randint(1, min(14, 1 << n)))
        order = list(range(len(S)))
        rng.shuffle(order)
        T = S.permuted(order)
        # index j of T is index order[j] of S
        relabel = lambda m: sum(1 << order[j] for j in iter_bits(m))
        a = {relabel(m) for m in enumerate_even_zero_sums(build_zero_sum_space(T))}
        b = set(enumerate_even_zero_sums(build_zero_sum_space(S)))
        assert a == b


def test_no_odd_members():
    space = build_zero_sum_space(S1)
    assert all(popcount(m) % 2 == 0 for m in enumerate_even_zero_sums(space))
