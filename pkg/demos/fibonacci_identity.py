"""Nonconsecutive subsets, their sizes, and the Fibonacci identity they prove.

Subsets of {1..n} with no two consecutive members are counted by F_{n+2},
and those of size k by C(n+1-k, k). Summing over k gives the classical
identity sum_k C(n+1-k, k) = F_{n+2}; the alternation-set cardinalities
are products of two such counts.
"""

from collections import Counter

from kostant import fibonacci, nonconsecutive_count_k, nonconsecutive_subsets

n = 6
subs = nonconsecutive_subsets(n)
print(f"nonconsecutive subsets of {{1..{n}}} ({len(subs)} = F_{n + 2}):")
by_size = Counter(len(s) for s in subs)
for s in subs:
    print(f"  {set(s) if s else '{}'}")
print()

print("counts by size against the binomial formula:")
for k in sorted(by_size):
    formula = nonconsecutive_count_k(n, k)
    print(f"  size {k}: enumerated {by_size[k]}, C({n + 1 - k},{k}) = {formula}")
print()

print(f"{'n':>3} {'sum_k C(n+1-k,k)':>18} {'F_(n+2)':>8}")
for m in range(0, 13):
    total = sum(nonconsecutive_count_k(m, k) for k in range(m + 2))
    print(f"{m:>3} {total:>18} {fibonacci(m + 2):>8}")
