"""Recovering the vertex: small-weight words as hyperplanes through a flat.

Generates seeded cones, runs the decomposer, and checks the recovered vertex
against the construction recipe, including a high-weight-range triangle cone
where the vertex is forced.
"""

import numpy as np

from pgcodes import decompose, random_small_weight, verify_decomposition
from pgcodes.bounds import bounds

print("low range, PG(3,9): every instance is a combination of <= 2 hyperplanes")
for seed in range(5):
    c, recipe = random_small_weight(3, 9, seed)
    d = decompose(c)
    print(
        f"  seed {seed}: family {recipe.family:5s} wt {c.weight():4d} "
        f"-> {len(d.terms)} terms, vertex match {d.vertex == recipe.vertex}, "
        f"rebuild exact {verify_decomposition(c, d)}"
    )

print("\nhigh range, PG(3,37): triangle, star and odd bases fit under the bound")
print(f"  floor(B) = {bounds(3, 37).floor_B}, two-hyperplane range ends at "
      f"{(3 * 37 - 6) * (37 + 1) + 2}")
shown = set()
seed = 0
while len(shown) < 3 and seed < 40:
    c, recipe = random_small_weight(3, 37, seed)
    seed += 1
    if recipe.family not in ("Ttriangle", "Tstar", "Todd") or recipe.family in shown:
        continue
    shown.add(recipe.family)
    d = decompose(c)
    print(
        f"  family {recipe.family:9s} wt {c.weight():5d} -> vertex dim {d.vertex.dim}, "
        f"{len(d.terms)} hyperplane terms, vertex match {d.vertex == recipe.vertex}"
    )
