"""Fibonacci numbers and nonconsecutive-subset counts.

Conventions: Fibonacci numbers are 1-indexed with F_1 = F_2 = 1 (there is no
F_0 here; asking for it is an error). A subset S of {1, ..., n} is
*nonconsecutive* when no two of its elements differ by 1. There are F_{n+2}
such subsets in total and C(n+1-k, k) of cardinality k, where the binomial
is the zero-padded one below.
"""

import math

from .errors import DEFAULT_SUBSET_GROUND_CAP, CapacityError

# Grows on demand; _FIB[n-1] == F_n.
_FIB = [1, 1]


def fibonacci(n: int) -> int:
    """Return F_n with F_1 = F_2 = 1. n must be a positive integer."""
    if n < 1:
        raise ValueError(f"fibonacci is 1-indexed with F_1 = F_2 = 1; got n={n}")
    while len(_FIB) < n:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[n - 1]


def binomial_safe(n: int, k: int) -> int:
    """C(n, k), defined as 0 whenever k < 0, n < 0, or k > n.

    In particular C(n, 0) = 1 only for n >= 0. The length-count formulas in
    the alternation module rely on this zero-padding to vanish exactly when
    a support condition is unsatisfiable.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# _subsets_upto(n)[m] lists the nonconsecutive subsets of {1..m} as sorted
# tuples. Recurrence: a subset of {1..m} either avoids m (subset of {1..m-1})
# or contains m and avoids m-1 (subset of {1..m-2} plus m).
_SUBSETS: list[list[tuple[int, ...]]] = [[()], [(), (1,)]]


def _raw_subsets(n: int) -> list[tuple[int, ...]]:
    while len(_SUBSETS) <= n:
        m = len(_SUBSETS)
        grown = list(_SUBSETS[m - 1])
        grown.extend(s + (m,) for s in _SUBSETS[m - 2])
        _SUBSETS.append(grown)
    return _SUBSETS[n]


def nonconsecutive_subsets(n: int, max_ground: int | None = None) -> list[tuple[int, ...]]:
    """All nonconsecutive subsets of {1, ..., n}, ordered by (size, lexicographic).

    n = 0 yields just the empty subset. The ground-set size is capped
    (default 25, i.e. at most F_27 = 196418 subsets) because the result is
    materialized; pass max_ground to raise the cap deliberately.
    """
    if n < 0:
        raise ValueError(f"ground set size must be >= 0, got {n}")
    cap = DEFAULT_SUBSET_GROUND_CAP if max_ground is None else max_ground
    if n > cap:
        raise CapacityError(
            f"nonconsecutive_subsets asked for ground set of size {n}, cap is {cap}; "
            f"pass max_ground to override"
        )
    return sorted(_raw_subsets(n), key=lambda s: (len(s), s))


def nonconsecutive_count_k(n: int, k: int) -> int:
    """Number of nonconsecutive k-subsets of {1, ..., n}: C(n+1-k, k)."""
    return binomial_safe(n + 1 - k, k)


def fib_identity_check(n: int) -> bool:
    """Verify sum_k C(n+1-k, k) == F_{n+2} for one n by direct evaluation."""
    if n < 0:
        raise ValueError(f"identity is stated for n >= 0, got {n}")
    total = sum(nonconsecutive_count_k(n, k) for k in range(n + 2))
    return total == fibonacci(n + 2)
