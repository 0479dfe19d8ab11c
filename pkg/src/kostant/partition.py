"""Kostant's partition function for A_r and its q-analog.

For a root-lattice weight xi, the q-analog counts multisets of positive
roots summing to xi, graded by multiset size: the coefficient of q^d is the
number of ways to write xi as a sum of exactly d positive roots. Evaluating
at q = 1 recovers the plain partition count. xi = 0 has the single empty
decomposition (the constant polynomial 1), and any weight with a negative
coordinate has none at all (the zero polynomial).

Two independent evaluators are provided. `kostant_q` is a memoized dynamic
program over the positive roots in lexicographic (i, j) order; it is the
one used everywhere else. `kostant_q_oracle` exhaustively enumerates
decompositions as nonincreasing root sequences with no memoization and no
shared logic beyond the root list; it exists so the DP can be checked
against something that is obviously correct, and it is capped by height
because it is deliberately naive.

All coefficients are Python integers, so nothing overflows. The DP memo is
a per-rank dict; under CPython's GIL concurrent readers at worst duplicate
work, and since every entry is a pure function of its key the results are
identical either way.
"""

from functools import lru_cache
from math import comb
from operator import index

from .errors import DEFAULT_ORACLE_HEIGHT_CAP, CapacityError
from .weights import Weight, height


class QPolynomial:
    """A polynomial in q with exact integer coefficients, densely stored.

    coeffs[d] is the coefficient of q^d; there is never a trailing zero, and
    the zero polynomial has an empty coefficient tuple. Instances are treated
    as immutable values: equal iff their coefficient tuples are equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [index(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPolynomial":
        if degree < 0:
            raise ValueError(f"monomial degree must be >= 0, got {degree}")
        return cls((0,) * degree + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for d, c in enumerate(b):
            out[d] += c
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        return self + (-other)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.is_zero or other.is_zero:
            return QPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for d, c in enumerate(self.coeffs):
            if c:
                for e, k in enumerate(other.coeffs):
                    out[d + e] += c * k
        return QPolynomial(out)

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def pretty(self) -> str:
        """Human form, e.g. "q + 2q^2 + q^3"; the zero polynomial is "0"."""
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def __repr__(self) -> str:
        return f"QPolynomial({self.pretty()})"


@lru_cache(maxsize=None)
def _spans(rank: int) -> tuple[tuple[int, int], ...]:
    """Positive roots of A_rank as (i, j) index pairs, lexicographic."""
    return tuple((i, j) for i in range(1, rank + 1) for j in range(i, rank + 1))


@lru_cache(maxsize=None)
def _first_span_at(rank: int) -> tuple[int, ...]:
    """_first_span_at(r)[f] = index in _spans(r) of the first root starting at f+1."""
    starts = []
    pos = 0
    for i in range(1, rank + 1):
        starts.append(pos)
        pos += rank - i + 1
    return tuple(starts)


# Per-rank memo tables for the DP, plus an optional size cap. When the cap
# is exceeded the table is flushed wholesale; entries are pure functions of
# their keys, so a flush only costs recomputation.
_MEMO: dict[int, dict] = {}
_MEMO_LIMIT: int | None = None


def set_partition_memo_limit(limit: int | None) -> None:
    """Cap the number of cached DP states per rank (None = unbounded)."""
    global _MEMO_LIMIT
    if limit is not None and limit < 1:
        raise ValueError(f"memo limit must be >= 1 or None, got {limit}")
    _MEMO_LIMIT = limit


def clear_partition_memo() -> None:
    _MEMO.clear()


def _poly_coeffs(rank: int, spans, first_at, memo, t: int, rem: tuple[int, ...]):
    # rem is componentwise >= 0 throughout. Positions strictly before the
    # start of span t can no longer be cleared, so jump t to the block of
    # roots starting at the first nonzero position, or fail.
    f = -1
    for k, c in enumerate(rem):
        if c:
            f = k
            break
    if f < 0:
        return (1,)
    block = first_at[f]
    if block > t:
        t = block
    if t >= len(spans) or spans[t][0] != f + 1:
        return ()
    key = (t, rem)
    hit = memo.get(key)
    if hit is not None:
        return hit
    i0, j0 = spans[t]
    copies = min(rem[i0 - 1 : j0])
    out: list[int] = []
    work = list(rem)
    for m in range(copies + 1):
        sub = _poly_coeffs(rank, spans, first_at, memo, t + 1, tuple(work))
        if sub:
            need = m + len(sub)
            if len(out) < need:
                out.extend([0] * (need - len(out)))
            for d, c in enumerate(sub):
                out[m + d] += c
        if m < copies:
            for k in range(i0 - 1, j0):
                work[k] -= 1
    result = tuple(out)
    if _MEMO_LIMIT is not None and len(memo) >= _MEMO_LIMIT:
        memo.clear()
    memo[key] = result
    return result


def kostant_q(rank: int, xi: Weight) -> QPolynomial:
    """The q-analog partition polynomial of xi over the positive roots of A_rank.

    Zero polynomial iff xi has a negative coordinate (checked up front, no
    enumeration); constant 1 for xi = 0.
    """
    if xi.rank != rank:
        raise ValueError(f"rank mismatch: {rank} vs weight of rank {xi.rank}")
    if any(c < 0 for c in xi.coords):
        return QPolynomial.zero()
    memo = _MEMO.setdefault(rank, {})
    coeffs = _poly_coeffs(rank, _spans(rank), _first_span_at(rank), memo, 0, xi.coords)
    return QPolynomial(coeffs)


def kostant_count(rank: int, xi: Weight) -> int:
    """Plain partition count: kostant_q evaluated at q = 1."""
    return kostant_q(rank, xi).evaluate(1)


def kostant_q_oracle(rank: int, xi: Weight, max_height: int | None = None) -> QPolynomial:
    """Recompute kostant_q by exhaustive depth-first enumeration.

    Decompositions are enumerated as nonincreasing sequences of positive
    roots (each multiset exactly once); there is no memoization and the only
    pruning is nonnegativity, which keeps this implementation independent of
    the DP. Heights above the cap (default 24) are refused; pass max_height
    to override.
    """
    if xi.rank != rank:
        raise ValueError(f"rank mismatch: {rank} vs weight of rank {xi.rank}")
    if any(c < 0 for c in xi.coords):
        return QPolynomial.zero()
    if xi.is_zero:
        return QPolynomial.one()
    h = height(xi)
    cap = DEFAULT_ORACLE_HEIGHT_CAP if max_height is None else max_height
    if h > cap:
        raise CapacityError(
            f"oracle enumeration for a weight of height {h} exceeds the cap of {cap}; "
            f"pass max_height to override"
        )
    spans = _spans(rank)
    counts = [0] * (h + 1)

    def dfs(hi: int, rem: tuple[int, ...], depth: int) -> None:
        for t in range(hi, -1, -1):
            i0, j0 = spans[t]
            ok = True
            for k in range(i0 - 1, j0):
                if rem[k] == 0:
                    ok = False
                    break
            if not ok:
                continue
            nxt = tuple(
                c - 1 if i0 - 1 <= k < j0 else c for k, c in enumerate(rem)
            )
            if any(nxt):
                dfs(t, nxt, depth + 1)
            else:
                counts[depth + 1] += 1

    dfs(len(spans) - 1, xi.coords, 0)
    return QPolynomial(counts)


def consecutive_closed_form(s: int) -> QPolynomial:
    """q(1+q)^(s-1): the partition q-analog of any height-s interval root.

    An interval root of height s splits into consecutive blocks in exactly
    C(s-1, y-1) ways using y parts, hence the binomial coefficients.
    """
    if s < 1:
        raise ValueError(f"interval height must be >= 1, got {s}")
    return QPolynomial((0,) + tuple(comb(s - 1, y) for y in range(s)))
