"""On trees, going around a circle never helps: circular cutwidth = cutwidth."""
from collections import Counter

from cutwidth import (all_labeled_trees, exact_circular_cutwidth, exact_cutwidth_dp,
                      generate_cycle, generate_random_tree)

for n in range(2, 7):
    widths = Counter()
    for T in all_labeled_trees(n):
        cw = exact_cutwidth_dp(T).value
        assert exact_circular_cutwidth(T).value == cw
        widths[cw] += 1
    print(f"n={n}: {sum(widths.values())} labeled trees, cutwidth histogram {dict(sorted(widths.items()))}")

T = generate_random_tree(8, seed=3)
print("random tree on 8 vertices:", T.edges)
print("cw =", exact_cutwidth_dp(T).value, " ccw =", exact_circular_cutwidth(T).value)

# a cycle is where the circle wins
C = generate_cycle(6)
print("C_6: cw =", exact_cutwidth_dp(C).value, " ccw =", exact_circular_cutwidth(C).value)
