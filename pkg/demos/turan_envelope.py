"""Turan graphs sit inside a narrow quadratic window.

The natural ordering 0..n-1 of the modular Turan graph already lands below
the upper end, and its profile is dominated by c(i) everywhere.
"""
from cutwidth import (exact_cutwidth_dp, generate_turan, turan_crossing_bound,
                      turan_envelope, turan_natural_ordering)

print(f"{'n':>3} {'k':>2} {'lower':>9} {'cw':>4} {'natural':>8} {'upper':>9}")
for k in (2, 3, 4):
    for n in range(4, 15, 2):
        lo, up = turan_envelope(n, k)
        cw = exact_cutwidth_dp(generate_turan(n, k)).value
        nat = turan_natural_ordering(n, k)
        print(f"{n:>3} {k:>2} {float(lo):>9.3f} {cw:>4} {nat.width:>8} {float(up):>9.3f}")

n, k = 12, 3
nat = turan_natural_ordering(n, k)
print("\nTur(12,3) natural profile vs c(i):")
for i, c in enumerate(nat.profile, start=1):
    print(f"  i={i:>2}  n_i={c:>3}  c(i)={float(turan_crossing_bound(n, k, i)):7.2f}")
