"""Codewords of the point-hyperplane code: weights, membership, secants.

Shows the three smallest weight layers (hyperplane, difference, sum of two
hyperplanes), the exact membership test, and line spectra.
"""

from pgcodes import (
    incidence_vector,
    is_codeword,
    linear_combination,
    point_table,
    secant_spectrum,
    subspace_dot,
    theta,
)
from pgcodes.geometry import hyperplane_by_index, subspaces_of

tab = point_table(3, 5)
h1, h2 = hyperplane_by_index(tab, 0), hyperplane_by_index(tab, 9)

plane = incidence_vector(h1)
diff = linear_combination(tab, [(1, h1), (4, h2)])
ssum = linear_combination(tab, [(1, h1), (1, h2)])

print("PG(3,5) weight layers:")
print(f"  one hyperplane:        wt {plane.weight()}  (theta_2 = {theta(2, 5)})")
print(f"  difference of two:     wt {diff.weight()}  (2q^2 = {2 * 25})")
print(f"  sum of two:            wt {ssum.weight()}  (2q^2 + theta_1 = {2 * 25 + theta(1, 5)})")

print(f"\nmembership: difference in code? {is_codeword(diff)}")
single_point = linear_combination(tab, [(1, h1)])
import numpy as np

bad = np.zeros(tab.num_points, dtype=np.int16)
bad[0] = 1
from pgcodes import Codeword

print(f"membership: single-point indicator in code? {is_codeword(Codeword(tab, bad))}")

print("\nevery line reports the coefficient sum (here 1 + 4 = 0 mod 5):")
for k, line in enumerate(subspaces_of(tab, 1)):
    print(f"  line {k}: sum over points = {subspace_dot(diff, line)}")
    if k == 3:
        break

sp = secant_spectrum(diff)
print("\nline spectrum of the difference (alpha: count):")
print("  ", {a: int(sp.counts[a]) for a in range(7) if sp.counts[a]})
print("  only 0-, 2-, q- secants: the short/long dichotomy in action")
