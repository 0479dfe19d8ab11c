"""Which Weyl group elements survive in the alternating multiplicity sum?

For the highest root and an interval weight [i, j] the survivors have a
clean description: products of pairwise nonconsecutive simple reflections
drawn from the generator ranges strictly left of i and strictly right of j
(never s_1, never s_r). This script builds the set both ways and shows the
Fibonacci product counting it.
"""

from kostant import (
    RootInterval,
    alt_cardinality,
    alt_set_bruteforce,
    alt_set_characterized,
    fibonacci,
    highest_root,
    interval_root,
)


def show(iv: RootInterval) -> None:
    brute = alt_set_bruteforce(iv.rank, highest_root(iv.rank), interval_root(iv))
    gen = alt_set_characterized(iv)
    print(f"rank {iv.rank}, mu = [{iv.i}, {iv.j}]")
    print(f"  brute force scan of {iv.rank + 1}! permutations:")
    for el in brute:
        word = " ".join(f"s{x}" for x in el.reduced_word()) or "e"
        print(f"    {word}")
    agree = "agree" if brute.elements == gen.elements else "DISAGREE"
    print(f"  generated description: {len(gen)} elements, sets {agree}")
    f = f"F_{iv.i} * F_{iv.rank - iv.j + 1}"
    print(f"  cardinality {f} = {fibonacci(iv.i)} * {fibonacci(iv.rank - iv.j + 1)}"
          f" = {alt_cardinality(iv)}")
    print()


if __name__ == "__main__":
    show(RootInterval(7, 3, 4))
    show(RootInterval(5, 2, 3))
    show(RootInterval(4, 1, 4))

    # the count depends only on the two gap widths, so a table says it all
    r = 10
    print(f"cardinalities for every interval at rank {r} (rows i, columns j):")
    print("     " + "".join(f"{j:>5}" for j in range(1, r + 1)))
    for i in range(1, r + 1):
        cells = []
        for j in range(1, r + 1):
            cells.append(f"{alt_cardinality(RootInterval(r, i, j)):>5}" if j >= i else "    .")
        print(f"{i:>4} " + "".join(cells))
