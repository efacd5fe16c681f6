"""Cutwidth of complete graphs, and what an optimal ordering looks like.

For K_n every ordering is optimal, so the profile is just i(n - i).
"""
import numpy as np

from cutwidth import exact_cutwidth_dp, generate_complete

for n in range(2, 13):
    res = exact_cutwidth_dp(generate_complete(n))
    print(f"K_{n:<2} cw = {res.value:>3}   floor(n^2/4) = {n * n // 4:>3}")

# the profile of K_8 in the returned ordering
prof = np.array(exact_cutwidth_dp(generate_complete(8)).witness.profile)
print("K_8 profile:", prof)
i = np.arange(1, 9)
print("i(n-i):     ", i * (8 - i))
