"""Process simulation against hand results, oracles, and exact counts."""

import itertools
import math

import pytest

from parkfun import exact, simulate
from parkfun.rng import SplitMix64, sub_seed


def test_park_identity_preferences():
    out = simulate.park(3, (1, 2, 3))
    assert out.assignment == (1, 2, 3)
    assert out.defect == 0
    assert out.occupied == frozenset({1, 2, 3})


def test_park_overflow_hand_simulation():
    out = simulate.park(2, (2, 2, 2))
    assert out.assignment == (2, None, None)
    assert out.defect == 2
    assert out.occupied == frozenset({2})


def test_park_one_space_two_drivers():
    assert simulate.park(1, (1, 1)).defect == 1


def test_park_rejects_bad_choices():
    with pytest.raises(ValueError):
        simulate.park(3, (0,))
    with pytest.raises(ValueError):
        simulate.park(3, (4,))
    with pytest.raises(ValueError):
        simulate.park(-1, ())


def test_park_empty_sequence():
    out = simulate.park(4, ())
    assert out.defect == 0 and out.occupied == frozenset()


def test_park_matches_naive_exhaustively():
    for n in range(1, 5):
        for m in range(5):
            for choices in itertools.product(range(1, n + 1), repeat=m):
                fast = simulate.park(n, choices)
                assert fast == simulate.park_naive(n, choices)
                assert fast.defect == simulate.defect_by_suffix_counts(n, choices)


def test_park_matches_naive_random_instances():
    gen = SplitMix64(2024)
    for _ in range(2000):
        n = gen.uniform_int(50)
        m = gen.uniform_int(80)
        choices = [gen.uniform_int(n) for _ in range(m)]
        fast = simulate.park(n, choices)
        assert fast == simulate.park_naive(n, choices)
        assert fast.defect == simulate.defect_by_suffix_counts(n, choices)


def test_park_outcome_consistency():
    gen = SplitMix64(5150)
    for _ in range(300):
        n = gen.uniform_int(20)
        m = gen.uniform_int(30)
        choices = [gen.uniform_int(n) for _ in range(m)]
        out = simulate.park(n, choices)
        parked = [s for s in out.assignment if s is not None]
        assert len(set(parked)) == len(parked)
        assert out.occupied == frozenset(parked)
        assert out.defect == m - len(parked)
        assert all(s >= c for s, c in zip(out.assignment, choices) if s is not None)


def test_park_appending_driver_is_monotone():
    gen = SplitMix64(31337)
    for _ in range(200):
        n = gen.uniform_int(12)
        m = gen.uniform_int(20)
        choices = [gen.uniform_int(n) for _ in range(m)]
        prev_defect, prev_occ = 0, 0
        for i in range(1, m + 1):
            out = simulate.park(n, choices[:i])
            assert out.defect >= prev_defect
            assert len(out.occupied) >= prev_occ
            prev_defect, prev_occ = out.defect, len(out.occupied)


def test_defect_invariant_under_permutations():
    gen = SplitMix64(808)
    for _ in range(25):
        n = gen.uniform_int(6)
        m = gen.uniform_int(6)
        base = [gen.uniform_int(n) for _ in range(m)]
        defects = {simulate.park(n, p).defect
                   for p in set(itertools.permutations(base))}
        assert len(defects) == 1


def test_enumerate_examples():
    assert simulate.enumerate_exhaustive(2, 2).counts == (3, 1, 0)
    assert simulate.enumerate_exhaustive(2, 3).counts == (0, 7, 1, 0)
    for m in range(1, 7):
        counts = simulate.enumerate_exhaustive(1, m).counts
        assert counts[m - 1] == 1 and sum(counts) == 1


def test_enumerate_matches_exact_distribution():
    for n in range(1, 7):
        for m in range(7):
            assert simulate.enumerate_exhaustive(n, m) == exact.defect_distribution(n, m)


def test_enumerate_cap_refusal():
    with pytest.raises(simulate.EnumerationCapError, match="999"):
        simulate.enumerate_exhaustive(10, 12, cap=999)
    # refusal, not truncation: nothing is returned


def test_enumerate_degenerate():
    assert simulate.enumerate_exhaustive(5, 0).counts == (1,)
    assert simulate.enumerate_exhaustive(0, 0).counts == (1,)
    with pytest.raises(ValueError):
        simulate.enumerate_exhaustive(0, 2)


def test_sample_deterministic_replay():
    a = simulate.sample_empirical(9, 12, 5000, seed=123)
    b = simulate.sample_empirical(9, 12, 5000, seed=123)
    assert a == b
    assert sum(a.counts) == 5000
    c = simulate.sample_empirical(9, 12, 5000, seed=124)
    assert c != a


def test_sample_forced_outcomes():
    emp = simulate.sample_empirical(1, 1, 1000, seed=6)
    assert emp.counts == (1000, 0)
    emp = simulate.sample_empirical(3, 0, 50, seed=6)
    assert emp.counts == (50,)


def test_sample_tail_within_three_standard_errors():
    emp = simulate.sample_empirical(100, 100, 10 ** 5, seed=1)
    p = exact.ratio_as_float(exact.tail_sum_alternating(100, 100, 10), 100 ** 100)
    se = math.sqrt(p * (1 - p) / 10 ** 5)
    assert abs(emp.tail_frequency(10) - p) <= 3 * se


def test_sample_matches_exact_frequencies_small_case():
    emp = simulate.sample_empirical(2, 3, 10 ** 4, seed=1)
    freqs = emp.frequencies()
    assert freqs[0] == 0.0
    assert abs(freqs[1] - 7 / 8) < 0.015
    assert abs(freqs[2] - 1 / 8) < 0.015


def test_cars_until_full_trivial_and_deterministic():
    assert all(simulate.cars_until_full(1, s) == 1 for s in range(25))
    assert simulate.cars_until_full(10, 42) == simulate.cars_until_full(10, 42) == 10
    with pytest.raises(ValueError):
        simulate.cars_until_full(0, 1)


def test_cars_until_full_calibrates_against_exact():
    # fraction of 1000 seeded runs that fill 50 spaces within 100 cars,
    # vs the exact probability cp(50, 100, 50) / 50**100
    runs = 1000
    full = sum(1 for i in range(runs)
               if simulate.cars_until_full(50, sub_seed(777, i)) <= 100)
    count = exact.tail_sum(50, 100, 50) - exact.tail_sum(50, 100, 51)
    p = exact.ratio_as_float(count, 50 ** 100)
    se = math.sqrt(p * (1 - p) / runs)
    assert abs(full / runs - p) <= 4 * se
