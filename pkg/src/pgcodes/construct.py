"""Generators for the named codeword families: hyperplane combinations, the
odd-characteristic word on three concurrent lines, its projective orbit, and
cones over plane codewords."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import bounds
from .code import Codeword, linear_combination, subspace_dot
from .errors import (
    FlatsNotDisjoint,
    NotOddPrime,
    SpanDeficient,
)
from .field import is_prime
from .geometry import (
    Collineation,
    Hyperplane,
    PointTable,
    Subspace,
    apply_collineation,
    complement_plane,
    cone_projection,
    empty_flat,
    hyperplanes_through,
    meet,
    plane_lines,
    point_flat,
    point_table,
    random_collineation,
    random_flat,
    span,
    theta,
)


def bagchi_codeword(p: int) -> Codeword:
    """The odd-characteristic weight-(3p-3) word on three concurrent lines.

    Values: a at (0,1,a), b at (1,0,b), -c at (1,1,c), zero elsewhere; the
    support is covered by X0=0, X1=0 and X0=X1, concurrent at (0,0,1).
    """
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"p = {p} must be an odd prime")
    tab = point_table(2, p)
    co = tab.coords
    vals = np.zeros(tab.num_points, dtype=np.int16)
    m0 = (co[:, 0] == 0) & (co[:, 1] == 1)
    vals[m0] = co[m0, 2]
    m1 = (co[:, 0] == 1) & (co[:, 1] == 0)
    vals[m1] = co[m1, 2]
    m2 = (co[:, 0] == 1) & (co[:, 1] == 1)
    vals[m2] = (-co[m2, 2]) % p
    return Codeword(tab, vals)


@dataclass(frozen=True)
class OddParams:
    """Parameters of the generalized odd word (gamma c + sum lambda_i m_i)^g."""

    p: int
    gamma: int
    lambdas: tuple[int, int, int]
    g: Collineation

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise NotOddPrime(f"p = {self.p} must be an odd prime")
        if self.gamma % self.p == 0:
            raise ValueError("gamma must be nonzero")


def _base_lines(tab: PointTable) -> list[Hyperplane]:
    p = tab.p
    return [
        Hyperplane(tab, np.array([1, 0, 0])),        # X0 = 0
        Hyperplane(tab, np.array([0, 1, 0])),        # X1 = 0
        Hyperplane(tab, np.array([1, p - 1, 0])),    # X0 = X1
    ]


def generalized_odd(params: OddParams) -> Codeword:
    """Projective image of gamma * base word + line combination; weight is
    3p-3 or 3p-2 according to the value at the image of the common point."""
    p = params.p
    tab = point_table(2, p)
    c = bagchi_codeword(p)
    m, m1, m2 = _base_lines(tab)
    lam, lam1, lam2 = params.lambdas
    combo = linear_combination(
        tab,
        [(x, h) for x, h in ((lam, m), (lam1, m1), (lam2, m2)) if x % p],
    )
    mix = Codeword(tab, (params.gamma * c.values + combo.values) % p)
    return apply_collineation(params.g, mix)


def odd_common_point(params: OddParams) -> int:
    """Index of the image of the lines' common point (0,0,1)."""
    tab = point_table(2, params.p)
    base = tab.index_of(np.array([[0, 0, 1]], dtype=np.int16))[0]
    return int(params.g.point_permutation()[base])


def cone_codeword(kappa: Subspace, pi: Subspace, base: Codeword) -> Codeword:
    """Cone over a plane codeword: every point off the vertex takes the base
    value of its projection; vertex points take the line-sum of the base,
    which any hyperplane representation forces to be the coefficient sum."""
    tab = kappa.table
    if pi.dim != 2:
        raise SpanDeficient("base flat must be a plane")
    if not meet(kappa, pi).is_empty:
        raise FlatsNotDisjoint("vertex meets the base plane")
    if span(kappa, pi).dim != tab.n:
        raise SpanDeficient("vertex and plane do not span the space")
    if base.n != 2 or base.q != tab.q:
        raise SpanDeficient("base must be a codeword of the plane over the same field")
    proj = cone_projection(kappa, pi)
    # express base in the plane's internal coordinates
    internal = base.values
    out = np.empty(tab.num_points, dtype=np.int16)
    live = proj >= 0
    out[live] = internal[proj[live]]
    _, line_pts = plane_lines(tab.q)
    s = int(internal[line_pts[0]].astype(np.int64).sum() % tab.p)
    out[~live] = s
    return Codeword(tab, out)


# ---------------------------------------------------------------------------
# seeded small-weight instance generator


_FAMILY_ORDER = ("T0", "Tq1", "T2q", "T2q1", "Tstar", "Ttriangle", "Todd")


def _family_min_weight(tag: str, n: int, q: int, p: int) -> Optional[int]:
    qn2 = q ** (n - 2)
    t3 = theta(n - 3, q)
    if tag == "T0":
        return 0
    if tag == "Tq1":
        return theta(n - 1, q)
    if tag == "T2q":
        return 2 * q ** (n - 1)
    if tag == "T2q1":
        return (2 * q + 1) * qn2 + t3
    if tag == "Tstar":
        return 3 * q * qn2
    if tag == "Ttriangle":
        return (3 * q - 3) * qn2
    if tag == "Todd":
        if p != q or p == 2:
            return None
        return (3 * p - 3) * qn2
    return None


def _random_plane_base(tag: str, q: int, rng: np.random.Generator) -> Codeword:
    tab = point_table(2, q)
    p = tab.p
    duals, pts = plane_lines(q)
    nlines = tab.num_points
    if tag == "T0":
        return Codeword(tab, np.zeros(nlines, dtype=np.int16))
    if tag == "Tq1":
        i = int(rng.integers(nlines))
        a = int(rng.integers(1, p))
        return linear_combination(tab, [(a, Hyperplane(tab, duals[i]))])
    if tag in ("T2q", "T2q1"):
        i, j = rng.choice(nlines, size=2, replace=False)
        a = int(rng.integers(1, p))
        if tag == "T2q":
            b = (-a) % p
        else:
            while True:
                b = int(rng.integers(1, p))
                if (a + b) % p:
                    break
            if p == 2:
                raise ValueError("T2q1 needs p > 2")
        return linear_combination(
            tab, [(a, Hyperplane(tab, duals[int(i)])), (b, Hyperplane(tab, duals[int(j)]))]
        )
    if tag == "Tstar":
        center = int(rng.integers(tab.num_points))
        pencil = hyperplanes_through(point_flat(tab, center))
        ids = rng.choice(len(pencil), size=3, replace=False)
        coeffs = [int(rng.integers(1, p)) for _ in range(3)]
        return linear_combination(tab, [(c, pencil[int(i)]) for c, i in zip(coeffs, ids)])
    if tag == "Ttriangle":
        while True:
            ids = rng.choice(nlines, size=3, replace=False)
            hs = [Hyperplane(tab, duals[int(i)]) for i in ids]
            common = meet(meet(hs[0].subspace(), hs[1].subspace()), hs[2].subspace())
            if common.is_empty:
                break
        coeffs = [int(rng.integers(1, p)) for _ in range(3)]
        return linear_combination(tab, list(zip(coeffs, hs)))
    if tag == "Todd":
        params = OddParams(
            p=p,
            gamma=int(rng.integers(1, p)),
            lambdas=tuple(int(rng.integers(0, p)) for _ in range(3)),
            g=random_collineation(tab, rng),
        )
        return generalized_odd(params)
    raise ValueError(f"unknown family {tag!r}")


def random_small_weight(n: int, q: int, seed: int):
    """Seeded random cone with weight at most floor(B_{n,q}) plus its
    ground-truth decomposition.

    Rejection-samples a plane family that fits under the bound, a random
    vertex and disjoint plane, then builds the cone.  The returned recipe
    uses the same vertex canonicalization as the decomposer, so round-trip
    tests can compare vertices as flats.
    """
    from .decompose import decomposition_from_vertex

    tab = point_table(n, q)
    p = tab.p
    bt = bounds(n, q)
    rng = np.random.default_rng(seed)
    families = [
        tag
        for tag in _FAMILY_ORDER
        if (_family_min_weight(tag, n, q, p) is not None
            and _family_min_weight(tag, n, q, p) <= bt.floor_B
            and not (tag == "T2q1" and p == 2))
    ]
    while True:
        tag = families[int(rng.integers(len(families)))]
        kappa = random_flat(tab, n - 3, rng)
        while True:
            rows = rng.integers(0, q, size=(3, tab.n + 1), dtype=np.int16)
            pi = Subspace(tab, rows)
            if pi.dim == 2 and meet(kappa, pi).is_empty and span(kappa, pi).dim == n:
                break
        base = _random_plane_base(tag, q, rng)
        cone = cone_codeword(kappa, pi, base)
        if cone.weight() > bt.floor_B:
            continue
        recipe = decomposition_from_vertex(cone, kappa)
        if recipe is None:
            raise AssertionError("constructed cone failed its own decomposition")
        recipe.family = tag
        recipe.seed = seed
        return cone, recipe
