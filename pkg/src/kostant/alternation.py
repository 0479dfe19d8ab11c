"""Weyl alternation sets for A_r and their Fibonacci structure.

The alternation set A(lam, mu) collects the Weyl group elements sigma whose
shifted image sigma(lam + rho) - rho - mu still admits a decomposition into
positive roots, i.e. contributes a nonzero term to the alternating weight
multiplicity sum. Two constructions are provided:

* `alt_set_bruteforce` tests every group element directly against the
  partition count. It works for any lam and mu but is capped by rank.

* `alt_set_characterized` is specific to lam = highest root and mu an
  interval root [i, j]: there the set consists exactly of the products of
  pairwise nonconsecutive generators drawn from {2..i-1} and {j+1..r-1}.
  Nonconsecutive subsets of an n-set are Fibonacci-counted, so the set has
  exactly F_i * F_{r-j+1} elements and is cheap to generate at ranks far
  beyond brute force reach.

The two constructions carry a provenance tag so tests can compare them
without one silently standing in for the other.

`count_by_length` and `max_length` expose the finer count of characterized
elements by how many generators they use on one side of a one-sided
interval, split by whether the generator adjacent to the interval (s_{i-1}
on the left, s_{j+1} on the right) appears. Note the index convention: k
counts the OTHER letters, drawn from the free range away from the boundary;
an element counted under (k, contains=True) has Coxeter length k + 1, one
counted under (k, contains=False) has length k. This is the convention
under which the counts are plain zero-padded binomials and their total
telescopes to the Fibonacci cardinality.
"""

from dataclasses import dataclass
from itertools import islice

from .combinatorics import binomial_safe, fibonacci, nonconsecutive_subsets
from .partition import kostant_count
from .weights import RootInterval, Weight, as_interval, highest_root, interval_root
from .weyl import WeylElement, enumerate_all, from_nonconsecutive_letters, shifted_action

PROVENANCE_BRUTE = "brute_force"
PROVENANCE_CHARACTERIZED = "characterized"

# How many elements of a characterized set get their membership re-verified
# against the partition count at construction time.
_SPOT_CHECK = 8


@dataclass(frozen=True)
class AlternationSet:
    """The elements sigma with a nonzero partition count after the shifted action.

    `elements` is a frozenset of WeylElements; iteration is deterministic,
    sorted by (length, reduced word). `provenance` records which
    construction produced the set.
    """

    rank: int
    lam: Weight
    mu: Weight
    elements: frozenset[WeylElement]
    provenance: str

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, sigma) -> bool:
        return sigma in self.elements

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda s: (s.length, s.reduced_word())))

    def to_json(self) -> dict:
        iv = as_interval(self.mu)
        return {
            "rank": self.rank,
            "mu": [iv.i, iv.j] if iv is not None else list(self.mu.coords),
            "count": len(self.elements),
            "elements": [list(s.reduced_word()) for s in self],
            "provenance": self.provenance,
        }


def alt_set_bruteforce(
    rank: int, lam: Weight, mu: Weight, max_rank: int | None = None
) -> AlternationSet:
    """Filter the full Weyl group by kostant_count(shifted image - mu) > 0.

    Rank is capped like enumerate_all (default 8); lam and mu may be any
    root-lattice weights of matching rank.
    """
    if lam.rank != rank or mu.rank != rank:
        raise ValueError(
            f"rank mismatch: rank={rank}, lam rank {lam.rank}, mu rank {mu.rank}"
        )
    members = []
    for sigma in enumerate_all(rank, max_rank):
        xi = shifted_action(sigma, lam) - mu
        if any(c < 0 for c in xi.coords):
            continue
        if kostant_count(rank, xi) > 0:
            members.append(sigma)
    return AlternationSet(rank, lam, mu, frozenset(members), PROVENANCE_BRUTE)


def alt_set_characterized(iv: RootInterval, max_ground: int | None = None) -> AlternationSet:
    """Generate A(highest root, interval root [i, j]) from its description.

    Elements are the products of pairwise nonconsecutive generators taken
    from {2..i-1} on the left of the interval and {j+1..r-1} on the right;
    the gap between the two ranges is at least 2, so any choice on one side
    combines freely with any choice on the other. A few of the generated
    elements are re-verified against the brute-force membership test.
    """
    r, i, j = iv.rank, iv.i, iv.j
    lam = highest_root(r)
    mu = interval_root(iv)
    left = nonconsecutive_subsets(max(0, i - 2), max_ground)
    right = nonconsecutive_subsets(max(0, r - 1 - j), max_ground)
    members = []
    for ls in left:
        base = tuple(x + 1 for x in ls)  # {1..i-2} shifted into {2..i-1}
        for rs in right:
            letters = base + tuple(x + j for x in rs)  # {1..r-1-j} into {j+1..r-1}
            members.append(from_nonconsecutive_letters(r, letters))
    for sigma in islice(members, _SPOT_CHECK):
        xi = shifted_action(sigma, lam) - mu
        assert kostant_count(r, xi) > 0, (
            f"characterized element {sigma.reduced_word()} fails the membership test"
        )
    return AlternationSet(r, lam, mu, frozenset(members), PROVENANCE_CHARACTERIZED)


def alt_cardinality(iv: RootInterval) -> int:
    """|A(highest root, [i, j])| = F_i * F_{r-j+1}, without generating the set."""
    return fibonacci(iv.i) * fibonacci(iv.rank - iv.j + 1)


def _validate_side(iv: RootInterval, side: str) -> None:
    if side == "right_boundary":
        if iv.i != 1 or iv.j > iv.rank - 1:
            raise ValueError(
                f"right_boundary counts need mu = [1, j] with j <= rank-1, got {iv}"
            )
    elif side == "left_boundary":
        if iv.j != iv.rank or iv.i < 2:
            raise ValueError(
                f"left_boundary counts need mu = [i, rank] with i >= 2, got {iv}"
            )
    else:
        raise ValueError(f"side must be 'left_boundary' or 'right_boundary', got {side!r}")


def count_by_length(iv: RootInterval, k: int, side: str, contains: bool) -> int:
    """Count characterized elements by free-range letters, split on the boundary letter.

    For a one-sided interval the active generator range has a single
    distinguished letter adjacent to the interval: s_{j+1} when mu = [1, j]
    (side="right_boundary"), s_{i-1} when mu = [i, r] ("left_boundary").
    This returns the number of elements using exactly k letters from the
    rest of the range, with the boundary letter required (contains=True) or
    forbidden (contains=False). Lengths: k+1 in the first case, k in the
    second. All four counts are zero-padded binomials; summing them over k
    recovers the Fibonacci cardinality.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _validate_side(iv, side)
    r, i, j = iv.rank, iv.i, iv.j
    if side == "right_boundary":
        top = r - j - 2 - k if contains else r - j - 1 - k
    else:
        top = i - 3 - k if contains else i - 2 - k
    return binomial_safe(top, k)


def max_length(iv: RootInterval, side: str, contains: bool) -> int:
    """Largest k with count_by_length(iv, k, side, contains) possibly nonzero.

    Floor formulas clamped below at zero; beyond the returned k every count
    is exactly 0.
    """
    _validate_side(iv, side)
    r, i, j = iv.rank, iv.i, iv.j
    if side == "right_boundary":
        raw = (r - j - 2) // 2 if contains else (r - j - 1) // 2
    else:
        raw = (i - 3) // 2 if contains else (i - 2) // 2
    return max(0, raw)
