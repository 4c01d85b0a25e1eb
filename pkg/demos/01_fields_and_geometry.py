"""Tour of the exact arithmetic and geometry layers.

Builds GF(9), walks the canonical point order of PG(2,3), and shows spans,
meets and pencils behaving like the textbook says they should.
"""

import numpy as np

from pgcodes import field_make, point_table, span, meet, theta
from pgcodes.geometry import flats_through, hyperplane_by_index, point_flat

gf9 = field_make(3, 2)
print(f"GF(9) with modulus {gf9.modulus} (coefficients little-endian)")
a = gf9.element((1, 2))  # 1 + 2x
b = gf9.element((0, 1))  # x
print(f"  ({a}) * ({b}) = {a * b},  ({a})^-1 = {a.inverse()}")
print(f"  element order by coefficient tuples: {[str(e) for e in sorted(gf9.elements())][:5]} ...")

tab = point_table(2, 3)
print(f"\nPG(2,3): theta_2 = {theta(2, 3)} points, canonical order:")
for i in range(5):
    print(f"  index {i}: {tuple(int(c) for c in tab.coords[i])}")

p0, p1 = tab.point(0), tab.point(4)
line = span(p0, p1)
print(f"\nline through points 0 and 4 has {line.num_points()} = q+1 points")

h1 = hyperplane_by_index(tab, 2).subspace()
h2 = hyperplane_by_index(tab, 7).subspace()
print(f"two distinct lines meet in a flat of dimension {meet(h1, h2).dim}")

pencil = list(flats_through(point_flat(tab, 6), 1))
print(f"lines through one point: {len(pencil)} (= q+1)")
