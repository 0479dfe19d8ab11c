"""Alternation sets: brute force vs generated form, Fibonacci counts, length splits."""

from collections import Counter

import pytest

from kostant import (
    CapacityError,
    RootInterval,
    alt_cardinality,
    alt_set_bruteforce,
    alt_set_characterized,
    count_by_length,
    fibonacci,
    from_word,
    highest_root,
    identity,
    interval_root,
    max_length,
    simple_root,
    zero_weight,
)


def _words(aset):
    return sorted(tuple(s.reduced_word()) for s in aset.elements)


def _all_intervals(r):
    for i in range(1, r + 1):
        for j in range(i, r + 1):
            yield RootInterval(r, i, j)


def test_bruteforce_small_examples():
    a = alt_set_bruteforce(2, highest_root(2), simple_root(2, 1))
    assert _words(a) == [()]
    a = alt_set_bruteforce(2, highest_root(2), highest_root(2))
    assert _words(a) == [()]
    a = alt_set_bruteforce(3, highest_root(3), simple_root(3, 1))
    assert _words(a) == [(), (2,)]


def test_characterized_small_examples():
    assert _words(alt_set_characterized(RootInterval(5, 2, 3))) == [(), (4,)]
    assert _words(alt_set_characterized(RootInterval(4, 2, 3))) == [()]
    assert _words(alt_set_characterized(RootInterval(7, 3, 4))) == [
        (),
        (2,),
        (2, 5),
        (2, 6),
        (5,),
        (6,),
    ]


def test_identity_is_always_a_member():
    for r in range(1, 9):
        for iv in _all_intervals(r):
            assert identity(r) in alt_set_characterized(iv)


def test_bruteforce_matches_characterized_through_rank_5():
    for r in range(1, 6):
        lam = highest_root(r)
        for iv in _all_intervals(r):
            brute = alt_set_bruteforce(r, lam, interval_root(iv))
            generated = alt_set_characterized(iv)
            assert brute.elements == generated.elements, iv
            assert brute.provenance == "brute_force"
            assert generated.provenance == "characterized"


def test_cardinality_formula_through_rank_10():
    for r in range(1, 11):
        for iv in _all_intervals(r):
            assert len(alt_set_characterized(iv)) == alt_cardinality(iv), iv


def test_cardinality_examples():
    assert alt_cardinality(RootInterval(7, 3, 4)) == 6  # F_3 * F_4
    assert alt_cardinality(RootInterval(10, 1, 10)) == 1
    assert alt_cardinality(RootInterval(16, 1, 1)) == fibonacci(16)


def test_supports_live_in_the_two_generator_ranges():
    for r in range(2, 8):
        for iv in _all_intervals(r):
            allowed = set(range(2, iv.i)) | set(range(iv.j + 1, r))
            for sigma in alt_set_characterized(iv):
                supp = sorted(sigma.support)
                assert set(supp) <= allowed
                assert all(b - a >= 2 for a, b in zip(supp, supp[1:]))


def test_generator_one_never_appears():
    for r in range(1, 8):
        lam = highest_root(r)
        for iv in _all_intervals(r):
            brute = alt_set_bruteforce(r, lam, interval_root(iv))
            assert all(1 not in sigma.support for sigma in brute.elements)


def test_bruteforce_with_general_mu():
    # lam = mu = 0: only the identity survives the shifted action
    for r in range(1, 4):
        a = alt_set_bruteforce(r, zero_weight(r), zero_weight(r))
        assert _words(a) == [()]
    # mu = 0, lam = highest root: only images that stay nonnegative survive
    a = alt_set_bruteforce(2, highest_root(2), zero_weight(2))
    assert _words(a) == [()]
    a = alt_set_bruteforce(3, highest_root(3), zero_weight(3))
    assert _words(a) == [(), (2,)]


def test_set_iteration_order_and_json():
    aset = alt_set_characterized(RootInterval(7, 3, 4))
    words = [tuple(s.reduced_word()) for s in aset]
    assert words == [(), (2,), (5,), (6,), (2, 5), (2, 6)]
    js = aset.to_json()
    assert js == {
        "rank": 7,
        "mu": [3, 4],
        "count": 6,
        "elements": [[], [2], [5], [6], [2, 5], [2, 6]],
        "provenance": "characterized",
    }


def test_bruteforce_json_uses_coords_for_non_interval_mu():
    aset = alt_set_bruteforce(2, highest_root(2), zero_weight(2))
    assert aset.to_json()["mu"] == [0, 0]


def test_bruteforce_cap_and_validation():
    with pytest.raises(CapacityError):
        alt_set_bruteforce(9, highest_root(9), simple_root(9, 1))
    with pytest.raises(ValueError):
        alt_set_bruteforce(3, highest_root(2), simple_root(3, 1))
    with pytest.raises(ValueError):
        alt_set_bruteforce(3, highest_root(3), simple_root(2, 1))


# ------------------------------------------------------- counts by length


def test_count_by_length_known_values():
    iv = RootInterval(10, 1, 3)
    assert count_by_length(iv, 2, "right_boundary", True) == 3
    assert count_by_length(iv, 2, "right_boundary", False) == 6
    assert count_by_length(iv, 0, "right_boundary", False) == 1  # the identity
    left = RootInterval(5, 5, 5)
    assert count_by_length(left, 0, "left_boundary", True) == 1  # s_4 alone
    assert count_by_length(left, 1, "left_boundary", True) == 1  # s_2 s_4


def test_max_length_known_values():
    assert max_length(RootInterval(10, 1, 3), "right_boundary", True) == 2
    assert max_length(RootInterval(5, 5, 5), "left_boundary", True) == 1
    # clamped at zero when the range cannot even hold the boundary letter
    assert max_length(RootInterval(6, 1, 5), "right_boundary", True) == 0
    assert max_length(RootInterval(6, 1, 5), "right_boundary", False) == 0


def _filtered_counts(iv, side):
    """Group the generated set by boundary presence and free-letter count."""
    r = iv.rank
    boundary = iv.j + 1 if side == "right_boundary" else iv.i - 1
    tally = Counter()
    for sigma in alt_set_characterized(iv):
        has = boundary in sigma.support
        free = sigma.length - (1 if has else 0)
        tally[(has, free)] += 1
    return tally


@pytest.mark.parametrize("side", ["right_boundary", "left_boundary"])
def test_count_by_length_matches_direct_filter_through_rank_9(side):
    for r in range(2, 10):
        ivs = (
            [RootInterval(r, 1, j) for j in range(1, r)]
            if side == "right_boundary"
            else [RootInterval(r, i, r) for i in range(2, r + 1)]
        )
        for iv in ivs:
            tally = _filtered_counts(iv, side)
            for contains in (True, False):
                for k in range(0, r + 2):
                    assert count_by_length(iv, k, side, contains) == tally.get(
                        (contains, k), 0
                    ), (iv, k, contains)


@pytest.mark.parametrize("side", ["right_boundary", "left_boundary"])
def test_counts_total_to_cardinality_and_vanish_past_max(side):
    for r in range(2, 15):
        ivs = (
            [RootInterval(r, 1, j) for j in range(1, r)]
            if side == "right_boundary"
            else [RootInterval(r, i, r) for i in range(2, r + 1)]
        )
        for iv in ivs:
            total = 0
            for contains in (True, False):
                bound = max_length(iv, side, contains)
                for k in range(0, bound + 1):
                    total += count_by_length(iv, k, side, contains)
                for k in range(bound + 1, bound + 5):
                    assert count_by_length(iv, k, side, contains) == 0
            assert total == alt_cardinality(iv), iv


def test_count_by_length_validation():
    iv = RootInterval(6, 2, 4)  # two-sided: neither side applies
    with pytest.raises(ValueError):
        count_by_length(iv, 0, "right_boundary", True)
    with pytest.raises(ValueError):
        count_by_length(iv, 0, "left_boundary", True)
    with pytest.raises(ValueError):
        count_by_length(RootInterval(6, 1, 3), 0, "middle", True)
    with pytest.raises(ValueError):
        count_by_length(RootInterval(6, 1, 3), -1, "right_boundary", True)
    with pytest.raises(ValueError):
        max_length(RootInterval(6, 1, 6), "right_boundary", True)  # j = rank
    with pytest.raises(ValueError):
        max_length(RootInterval(6, 1, 3), "left_boundary", True)  # i = 1


def test_characterized_rejects_oversized_ground_set():
    # the free range {2..39} would need F_40 elements; refused before any are built
    with pytest.raises(CapacityError):
        alt_set_characterized(RootInterval(40, 1, 1))


def test_from_word_membership_check():
    aset = alt_set_characterized(RootInterval(7, 3, 4))
    assert from_word(7, [5, 2]) in aset
    assert from_word(7, [3]) not in aset
