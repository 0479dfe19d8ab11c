"""The Weyl group of A_r, realized as the symmetric group S_{r+1}.

Elements are stored in one-line notation: perm[x-1] is the image of x, for
x in 1..r+1. The simple reflection s_i is the adjacent transposition
(i, i+1), and words multiply as function composition with the RIGHTMOST
letter applied first: from_word(r, [a, b]) means "apply s_b, then s_a".
Consequently from_word(r, w1 + w2) == from_word(r, w1) * from_word(r, w2).

The action on the root lattice goes through epsilon coordinates. A weight
with simple-root coordinates (c_1, ..., c_r) has epsilon coordinates
(c_1, c_2 - c_1, ..., c_r - c_{r-1}, -c_r), which always sum to zero; a
permutation sigma moves the entry in slot x to slot sigma(x); partial sums
convert back. Both directions are integral, so the action is exact.

The shifted action sigma(lam + rho) - rho is computed on doubled weights
(2*lam + 2*rho is integral even though rho alone is not) and halved at the
end; a parity check guards the halving.
"""

from itertools import permutations
from typing import Iterator

from .errors import BRUTE_CAP_ENV, CapacityError, resolve_brute_rank_cap
from .weights import Weight, _two_rho_coords


class WeylElement:
    """A permutation of {1, ..., rank+1} acting on the rank-r root lattice.

    Immutable; equality and hashing use only (rank, perm). Length, support
    and a reduced word are computed lazily and cached.
    """

    def __init__(self, rank: int, perm: tuple[int, ...], check: bool = True):
        perm = tuple(perm)
        if check:
            if rank < 1:
                raise ValueError(f"rank must be >= 1, got {rank}")
            if sorted(perm) != list(range(1, rank + 2)):
                raise ValueError(
                    f"one-line notation for rank {rank} must permute 1..{rank + 1}, got {perm}"
                )
        self.rank = rank
        self.perm = perm
        self._length: int | None = None
        self._word: tuple[int, ...] | None = None
        self._support: frozenset[int] | None = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeylElement)
            and self.rank == other.rank
            and self.perm == other.perm
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.perm))

    def __repr__(self) -> str:
        return f"WeylElement(rank={self.rank}, perm={self.perm})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Function composition: (self * other)(x) = self(other(x))."""
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        sp, op = self.perm, other.perm
        return WeylElement(self.rank, tuple(sp[op[x] - 1] for x in range(len(sp))), check=False)

    @property
    def is_identity(self) -> bool:
        return all(v == x for x, v in enumerate(self.perm, start=1))

    @property
    def length(self) -> int:
        """Coxeter length: the number of inversions of the one-line notation."""
        if self._length is None:
            p = self.perm
            n = len(p)
            self._length = sum(
                1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b]
            )
        return self._length

    @property
    def sign(self) -> int:
        """(-1) ** length, computed from cycle parity in linear time."""
        seen = [False] * len(self.perm)
        cycles = 0
        for start in range(len(self.perm)):
            if not seen[start]:
                cycles += 1
                x = start
                while not seen[x]:
                    seen[x] = True
                    x = self.perm[x] - 1
        return -1 if (len(self.perm) - cycles) % 2 else 1

    def reduced_word(self) -> tuple[int, ...]:
        """One reduced word for this element, deterministic.

        Found by repeatedly stripping the smallest left descent (equivalently
        the smallest right descent of the inverse); each strip removes one
        inversion, so the word length equals `length`, and a product of
        pairwise commuting generators yields its letters in increasing order.
        """
        if self._word is None:
            inv = [0] * len(self.perm)
            for x, v in enumerate(self.perm):
                inv[v - 1] = x + 1
            word = []
            while True:
                for x in range(len(inv) - 1):
                    if inv[x] > inv[x + 1]:
                        inv[x], inv[x + 1] = inv[x + 1], inv[x]
                        word.append(x + 1)
                        break
                else:
                    break
            self._word = tuple(word)
            if self._length is None:
                self._length = len(self._word)
        return self._word

    @property
    def support(self) -> frozenset[int]:
        """The set of generator indices appearing in any reduced word."""
        if self._support is None:
            self._support = frozenset(self.reduced_word())
        return self._support

    def to_json(self) -> dict:
        return {"word": list(self.reduced_word()), "perm": list(self.perm)}


def identity(rank: int) -> WeylElement:
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    return WeylElement(rank, tuple(range(1, rank + 2)), check=False)


def simple_reflection(rank: int, i: int) -> WeylElement:
    """s_i, the adjacent transposition (i, i+1)."""
    if not 1 <= i <= rank:
        raise ValueError(f"generator index must satisfy 1 <= i <= {rank}, got {i}")
    perm = list(range(1, rank + 2))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return WeylElement(rank, tuple(perm), check=False)


def from_word(rank: int, word) -> WeylElement:
    """Product s_{w_1} s_{w_2} ... s_{w_k}, the rightmost letter acting first.

    Right-multiplying by s_i swaps the one-line entries in slots i and i+1,
    so the word is folded left to right by entry swaps.
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    perm = list(range(1, rank + 2))
    for letter in word:
        if not 1 <= letter <= rank:
            raise ValueError(f"letter {letter} out of range 1..{rank}")
        perm[letter - 1], perm[letter] = perm[letter], perm[letter - 1]
    return WeylElement(rank, tuple(perm), check=False)


def from_nonconsecutive_letters(rank: int, letters) -> WeylElement:
    """Product of the commuting generators named by `letters`.

    Letters must be strictly increasing with gaps >= 2, so they pairwise
    commute and the word is reduced; length and support are known up front
    and cached, which is what makes materializing large alternation sets
    cheap.
    """
    letters = tuple(letters)
    prev = None
    for letter in letters:
        if not 1 <= letter <= rank:
            raise ValueError(f"letter {letter} out of range 1..{rank}")
        if prev is not None and letter - prev < 2:
            raise ValueError(f"letters must be nonconsecutive and increasing, got {letters}")
        prev = letter
    perm = list(range(1, rank + 2))
    for letter in letters:
        perm[letter - 1], perm[letter] = perm[letter], perm[letter - 1]
    el = WeylElement(rank, tuple(perm), check=False)
    el._length = len(letters)
    el._word = letters
    el._support = frozenset(letters)
    return el


def length_of(sigma: WeylElement) -> int:
    return sigma.length


def support(sigma: WeylElement) -> frozenset[int]:
    return sigma.support


def apply(sigma: WeylElement, w: Weight) -> Weight:
    """sigma acting linearly on a root-lattice weight, via epsilon coordinates."""
    if sigma.rank != w.rank:
        raise ValueError(f"rank mismatch: element {sigma.rank} vs weight {w.rank}")
    c = w.coords
    perm = sigma.perm
    n = len(perm)
    eps = [0] * n
    prev = 0
    for x in range(n - 1):
        cx = c[x]
        eps[perm[x] - 1] = cx - prev
        prev = cx
    eps[perm[n - 1] - 1] = -prev
    out = []
    acc = 0
    for k in range(n - 1):
        acc += eps[k]
        out.append(acc)
    assert acc + eps[n - 1] == 0, "epsilon coordinates of a lattice weight must sum to 0"
    return Weight(w.rank, tuple(out))


def shifted_action(sigma: WeylElement, lam: Weight) -> Weight:
    """sigma(lam + rho) - rho, computed exactly on doubled weights."""
    if sigma.rank != lam.rank:
        raise ValueError(f"rank mismatch: element {sigma.rank} vs weight {lam.rank}")
    tr = _two_rho_coords(lam.rank)
    doubled = Weight(lam.rank, tuple(2 * c + t for c, t in zip(lam.coords, tr)))
    image = apply(sigma, doubled)
    halved = []
    for v, t in zip(image.coords, tr):
        d = v - t
        assert d % 2 == 0, "shifted action produced a non-integral weight"
        halved.append(d // 2)
    return Weight(lam.rank, tuple(halved))


def enumerate_all(rank: int, max_rank: int | None = None) -> Iterator[WeylElement]:
    """All (rank+1)! Weyl group elements, lexicographic by one-line notation.

    Refuses ranks above the brute-force cap (default 8, so at most 362880
    elements); override with the max_rank argument, the CLI --brute-cap
    flag, or the KOSTANT_MAX_BRUTE_RANK environment variable. The cap is
    checked eagerly, before the first element is produced.
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    cap = resolve_brute_rank_cap(max_rank)
    if rank > cap:
        raise CapacityError(
            f"full Weyl group enumeration at rank {rank} exceeds the cap of {cap}; "
            f"raise it with --brute-cap or {BRUTE_CAP_ENV} if you really want "
            f"{rank + 1}! elements"
        )
    return (WeylElement(rank, perm, check=False) for perm in permutations(range(1, rank + 2)))
